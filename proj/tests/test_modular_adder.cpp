// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include "tauplus/forward.hpp"
#include "tauplus/modular_adder.hpp"
#include "tauplus/random.hpp"

using namespace tauplus;

TEST_CASE("mod_add") {
  CHECK(mod_add(22, 22, 23) == 21);
  CHECK(mod_add(0, 0, 23) == 0);
  CHECK(mod_add(160, 400, 512) == 48);
  CHECK_THROWS_AS(mod_add(23, 0, 23), std::out_of_range);
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const Int m = 1 + rng.below(std::uint64_t{1} << 50);
    const Int a = rng.below(m), b = rng.below(m);
    const Int r = mod_add(a, b, m);
    CHECK(r >= 0);
    CHECK(r < m);
    CHECK(r == (a + b) % m);
  }
}

TEST_CASE("mod_multi_add") {
  CHECK(mod_multi_add({2, 12, 5, 0}, 23) == 19);
  CHECK(mod_multi_add({0, 0, 0}, 575) == 0);
  CHECK_THROWS_AS(mod_multi_add({}, 23), std::invalid_argument);
  CHECK_THROWS_AS(mod_multi_add({1, 23}, 23), std::out_of_range);
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Int> terms;
    Int total = 0;
    for (int k = 0; k < 13; ++k) {
      terms.push_back(rng.below(std::uint64_t{575}));
      total += terms.back();
    }
    CHECK(mod_multi_add(terms, 575) == total % 575);
  }
}

TEST_CASE("rns_add") {
  const TauPlusSet s = make_tau_plus(4);
  CHECK(rns_add(forward(100, s), forward(200, s), s) == forward(300, s));
  const ResidueVector v = forward(123456, s);
  CHECK(rns_add(v, forward(0, s), s) == v);
  CHECK(rns_add(forward(294399, s), forward(1, s), s) == forward(0, s));
  CHECK_THROWS_AS(rns_add(v, forward(0, make_tau_plus(5)), s), std::invalid_argument);
  CHECK_THROWS_AS(rns_add(ResidueVector{4, 512, 0, 0}, v, s), std::out_of_range);
}

TEST_CASE("homomorphism") {
  for (unsigned q : {4u, 9u, 16u}) {
    CAPTURE(q);
    const TauPlusSet s = make_tau_plus(q);
    const ForwardConverter fwd(s);
    Rng rng(q);
    for (int i = 0; i < 20000; ++i) {
      const Int x = rng.below(s.dr), y = rng.below(s.dr);
      REQUIRE(fwd((x + y) % s.dr) == rns_add(fwd(x), fwd(y), s));
    }
  }
}
