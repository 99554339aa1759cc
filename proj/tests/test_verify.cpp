// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include "tauplus/random.hpp"
#include "tauplus/verify.hpp"

using namespace tauplus;

TEST_CASE("rng streams are stable") {
  Rng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
  CHECK(va != d.next());
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  Rng r(7);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(std::uint64_t{23}) < 23);
  const Int big = pow2(130) + 5;
  for (int i = 0; i < 200; ++i) {
    const Int v = r.below(big);
    CHECK(v >= 0);
    CHECK(v < big);
  }
}

TEST_CASE("rng regression value") {
  Rng r(1, 0);
  CHECK(r.next() == 10276022874973721191ULL);
}

TEST_CASE("sweep results do not depend on worker count") {
  const TauPlusSet s = make_tau_plus(9);
  const SweepSpec one{SweepMode::sample, 40000, 5, 1};
  const SweepSpec four{SweepMode::sample, 40000, 5, 4};
  const SweepCounts a = sweep_round_trip(s, one);
  const SweepCounts b = sweep_round_trip(s, four);
  CHECK(a.checked == 40000);
  CHECK(a.checked == b.checked);
  CHECK(a.passed == b.passed);
  CHECK(a.ok());
  const SweepCounts h1 = sweep_homomorphism(s, 20000, 3, 1);
  const SweepCounts h3 = sweep_homomorphism(s, 20000, 3, 3);
  CHECK(h1.checked == h3.checked);
  CHECK(h1.ok());
  CHECK(h3.ok());
}

TEST_CASE("parallel sweep surfaces the earliest failure") {
  const auto fn = [](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    SweepCounts c;
    for (auto i = begin; i < end; ++i) c.record(i % 50000 != 49999, [i] { return std::to_string(i); });
    return c;
  };
  for (unsigned w : {1u, 2u, 8u}) {
    const SweepCounts c = parallel_sweep(200000, w, fn);
    CHECK(c.checked == 200000);
    CHECK(c.passed == 200000 - 4);
    CHECK(c.first_failure == "49999");
  }
}

TEST_CASE("exhaustive sweeps") {
  const TauPlusSet s4 = make_tau_plus(4);
  const SweepSpec ex{SweepMode::exhaustive, 0, 1, 0};
  const SweepCounts r = sweep_round_trip(s4, ex);
  CHECK(r.checked == 294400);
  CHECK(r.ok());
  CHECK(sweep_staged_forward(s4, ex).ok());
  CHECK_THROWS_AS(run_verify(9, ex), std::invalid_argument);
}

TEST_CASE("path agreement") {
  const SweepCounts c = sweep_path_agreement(make_tau_plus(9), 5000, 11, 0);
  CHECK(c.checked == 5002);
  CHECK(c.ok());
}

TEST_CASE("verify report") {
  const VerifyReport small = run_verify(4, {SweepMode::sample, 5000, 2, 0});
  CHECK(small.ok());
  CHECK_FALSE(small.path_agreement_run);
  const VerifyReport big = run_verify(12, {SweepMode::sample, 5000, 2, 0});
  CHECK(big.ok());
  CHECK(big.path_agreement_run);
}
