// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tauplus/csa_schedule.hpp"
#include "tauplus/random.hpp"
#include "tauplus/reverse.hpp"

using namespace tauplus;

namespace {

const ReductionPlan& plan_for(unsigned q) {
  static std::map<unsigned, std::pair<BitMatrix, ReductionPlan>> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    BitMatrix m = build_bit_matrix(make_tau_plus(q));
    ReductionPlan p = plan_reduction(m);
    it = cache.emplace(q, std::pair{std::move(m), std::move(p)}).first;
  }
  return it->second.second;
}

ResidueVector random_residues(Rng& rng, const TauPlusSet& s) {
  ResidueVector rv{s.q, rng.below(s.m1), 0, 0};
  rv.x2 = rng.below(s.m2);
  rv.x3 = rng.below(s.m3);
  return rv;
}

}  // namespace

TEST_CASE("column counting") {
  CHECK(column_after(13, 4, 0, 4) == 9);
  CHECK(column_after(3, 1, 0, 0) == 1);
  CHECK(column_after(2, 0, 1, 1) == 2);
}

TEST_CASE("apply_level folds spilled carries") {
  // Width 19 ring (q = 9), fold column 16.
  std::vector<int> d(19, 3), fa(19, 1), ha(19, 0);
  const std::vector<int> out = apply_level(d, fa, ha, 16);
  CHECK(out[0] == 1 + 1);   // sum + folded carry
  CHECK(out[16] == 1 + 1 + 1);  // sum + carry + folded complement
  CHECK(out[5] == 2);
  std::vector<int> bad(19, 2);
  CHECK_THROWS_AS(apply_level(bad, fa, ha, 16), std::invalid_argument);
}

TEST_CASE("plans terminate within seven levels") {
  for (unsigned q = 9; q <= 32; ++q) {
    CAPTURE(q);
    const ReductionPlan& p = plan_for(q);
    CHECK(p.levels.size() <= static_cast<std::size_t>(kMaxReductionLevels));
    CHECK(*std::max_element(p.final_profile.begin(), p.final_profile.end()) <= 2);
    for (std::size_t l = 1; l <= p.levels.size(); ++l)
      if (p.max_depth(l - 1) > 2) CHECK(p.max_depth(l) < p.max_depth(l - 1));
    for (std::size_t l = 0; l < p.levels.size(); ++l) {
      const LevelPlan& lv = p.levels[l];
      CHECK(apply_level(lv.depth_before, lv.fa, lv.ha, p.fold_column) == lv.depth_after);
      CHECK(lv.spills == lv.fa.back() + lv.ha.back());
      if (l) CHECK(lv.depth_before == p.levels[l - 1].depth_after);
    }
  }
  CHECK_THROWS_AS(plan_reduction(BitMatrix{8, 17, 0, {}, 0}), std::invalid_argument);
}

TEST_CASE("plan constant accounts for every fold") {
  for (unsigned q : {9u, 16u, 32u}) {
    const TauPlusSet s = make_tau_plus(q);
    const ReductionPlan& p = plan_for(q);
    const BitMatrix m = build_bit_matrix(s);
    CHECK(p.total_spills() == 7);
    CHECK(p.folded_constant ==
          mod(m.folded_constant - p.total_spills() * pow2(2 * q - 2), s.pair_modulus));
  }
}

TEST_CASE("simulation preserves the value") {
  for (unsigned q : {9u, 10u, 12u, 16u, 24u, 32u}) {
    CAPTURE(q);
    const TauPlusSet s = make_tau_plus(q);
    const BitMatrix m = build_bit_matrix(s);
    const ReductionPlan& p = plan_for(q);
    CHECK(plan_value(p, simulate_plan(p, m, {q, 0, 0, 0})) == 0);
    CHECK(plan_value(p, simulate_plan(p, m, {q, s.m1 - 1, s.m2 - 1, s.m3 - 1})) == s.pair_modulus - 1);
    Rng rng(q);
    const int n = q == 9 ? 10000 : 2000;
    for (int i = 0; i < n; ++i) {
      const ResidueVector rv = random_residues(rng, s);
      const RowPair rows = simulate_plan(p, m, rv);
      REQUIRE(rows.sum_row < pow2(2 * q + 1));
      REQUIRE(rows.carry_row < pow2(2 * q + 1));
      REQUIRE(plan_value(p, rows) == eval_bit_matrix(m, rv));
    }
  }
}

TEST_CASE("simulation rejects a foreign matrix") {
  const BitMatrix m10 = build_bit_matrix(make_tau_plus(10));
  CHECK_THROWS_AS(simulate_plan(plan_for(9), m10, {10, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("adder count report") {
  const auto ref = reference_level_formulas(16);
  CHECK(ref == std::vector<double>{88, 60, 48, 32, 19, 12, 5});
  const FaReport r = fa_count_report(plan_for(16));
  CHECK(r.reference_level_sum == 264);
  CHECK(r.reference_grand_total == 248);
  double sum = 0;
  for (double v : r.level_totals) sum += v;
  CHECK(sum == r.grand_total);
  for (unsigned q : {9u, 16u, 32u}) {
    const FaReport rq = fa_count_report(plan_for(q));
    CHECK(rq.reference_level_sum == doctest::Approx(14.5 * q + 32));
    CHECK(rq.grand_total <= 1.15 * (14.5 * q + 32));
    CHECK(rq.grand_total >= 0.85 * (14.5 * q + 32));
  }
}

TEST_CASE("plan csv") {
  const ReductionPlan& p = plan_for(9);
  const std::string csv = plan_csv(p);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "level,column,depth_before,fa,ha,depth_after,spills");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == static_cast<int>(p.levels.size() * p.width));
}
