// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include "tauplus/forward.hpp"
#include "tauplus/random.hpp"

using namespace tauplus;

TEST_CASE("operand slicing") {
  const TauPlusSet s = make_tau_plus(4);
  CHECK(split_operand(100000, s) == OperandSlices{3, 1, 21, 0});
  CHECK(split_operand(0, s) == OperandSlices{0, 0, 0, 0});
  CHECK_THROWS_AS(split_operand(294400, s), std::out_of_range);

  for (unsigned q : {4u, 9u, 16u, 32u}) {
    const TauPlusSet set = make_tau_plus(q);
    Rng rng(q);
    for (int i = 0; i < 5000; ++i) {
      const Int x = i == 0 ? set.dr - 1 : rng.below(set.dr);
      const OperandSlices p = split_operand(x, set);
      CHECK(p.x3 < pow2(q));
      CHECK(p.x2 < pow2(q + 1));
      CHECK(p.x1 < pow2(q + 1));
      CHECK(p.x0 < pow2(q + 1));
      CHECK((p.x3 << (3 * q + 3)) + (p.x2 << (2 * q + 2)) + (p.x1 << (q + 1)) + p.x0 == x);
    }
  }
}

TEST_CASE("lut entries") {
  const TauPlusSet s = make_tau_plus(4);
  const ChannelLut f2 = build_lut(s, 2), f3 = build_lut(s, 3);
  CHECK(f2(1) == 9);
  CHECK(f3(1) == 7);
  CHECK(f2(0) == 0);
  CHECK(f3(0) == 0);
  CHECK(f2.materialized());
  CHECK_THROWS_AS(f2(32), std::out_of_range);
  CHECK_THROWS_AS(ChannelLut(s, 1), std::invalid_argument);
}

TEST_CASE("lut composition law") {
  for (unsigned q = 3; q <= 12; ++q) {
    CAPTURE(q);
    const TauPlusSet s = make_tau_plus(q);
    for (int ch : {2, 3}) {
      const ChannelLut f(s, ch);
      const Int& m = f.modulus();
      for (unsigned long z = 0; z < (1UL << (q + 1)); ++z) {
        for (int k = 1; k <= 3; ++k) {
          Int expect;
          const Int base = pow2(k * (q + 1));
          mpz_mul_ui(expect.get_mpz_t(), base.get_mpz_t(), z);
          REQUIRE(f.chain(Int(z), k) == expect % m);
          REQUIRE(f.chain(Int(z), k) < m);
        }
      }
    }
  }
  for (unsigned q : {16u, 24u, 32u}) {
    const TauPlusSet s = make_tau_plus(q);
    Rng rng(q);
    for (int ch : {2, 3}) {
      const ChannelLut f(s, ch);
      CHECK(f.materialized() == (q <= ChannelLut::kDefaultMaterializeMaxQ));
      for (int i = 0; i < 20000; ++i) {
        const Int z = rng.below(f.size());
        for (int k = 1; k <= 3; ++k) REQUIRE(f.chain(z, k) == (z * pow2(k * (q + 1))) % f.modulus());
      }
    }
  }
}

TEST_CASE("materialized and on-demand tables agree") {
  const TauPlusSet s = make_tau_plus(14);
  for (int ch : {2, 3}) {
    const ChannelLut table(s, ch), on_demand(s, ch, 0);
    CHECK(table.materialized());
    CHECK_FALSE(on_demand.materialized());
    for (unsigned long z = 0; z < (1UL << 15); ++z) REQUIRE(table(Int(z)) == on_demand(Int(z)));
  }
}

TEST_CASE("staged residues on the worked example") {
  const TauPlusSet s = make_tau_plus(4);
  const ForwardConverter fwd(s);
  const ChannelLut& f2 = fwd.lut(2);
  CHECK(f2.chain(3, 3) == 2);
  CHECK(f2.chain(1, 2) == 12);
  CHECK(f2(21) == 5);
  const ChannelLut& f3 = fwd.lut(3);
  CHECK(f3.chain(3, 3) + f3.chain(1, 2) + f3(21) == 50);

  Int raw;
  CHECK(fwd.residue_staged(100000, 2, &raw) == 19);
  CHECK(raw == 19);
  CHECK(fwd.residue_staged(100000, 3, &raw) == 0);
  CHECK(raw == 50);
  CHECK(residue_mi_staged(0, s, 2) == 0);
  CHECK(residue_mi_staged(0, s, 3) == 0);
}

TEST_CASE("m1 residue") {
  const TauPlusSet s = make_tau_plus(4);
  CHECK(residue_m1(100000, s) == 160);
  CHECK(residue_m1(0, s) == 0);
  CHECK(residue_m1(294399, s) == 511);
}

TEST_CASE("forward conversion") {
  const TauPlusSet s = make_tau_plus(4);
  CHECK(forward(100000, s) == ResidueVector{4, 160, 19, 0});
  CHECK(forward(0, s) == ResidueVector{4, 0, 0, 0});
  CHECK(forward(294399, s) == ResidueVector{4, 511, 22, 24});
  CHECK_THROWS_AS(forward(294400, s), std::out_of_range);
}

TEST_CASE("staged equals direct remainder, exhaustive at q=4") {
  const TauPlusSet s = make_tau_plus(4);
  const ForwardConverter fwd(s);
  for (unsigned long x = 0; x < 294400; ++x) {
    const Int X(x);
    Int raw2, raw3;
    REQUIRE(fwd.residue_staged(X, 2, &raw2) == x % 23);
    REQUIRE(fwd.residue_staged(X, 3, &raw3) == x % 25);
    REQUIRE(raw2 < 4 * 23);
    REQUIRE(raw3 < 4 * 25);
  }
}

TEST_CASE("staged equals direct remainder, sampled") {
  for (unsigned q : {9u, 12u, 16u, 24u, 32u}) {
    CAPTURE(q);
    const TauPlusSet s = make_tau_plus(q);
    const ForwardConverter fwd(s);
    Rng rng(q * 7);
    for (int i = 0; i < 20000; ++i) {
      const Int x = rng.below(s.dr);
      REQUIRE(fwd.residue_staged(x, 2) == x % s.m2);
      REQUIRE(fwd.residue_staged(x, 3) == x % s.m3);
    }
  }
}
