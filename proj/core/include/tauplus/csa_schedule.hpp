// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tauplus/bit_matrix.hpp"
#include "tauplus/integer.hpp"
#include "tauplus/modular_adder.hpp"

namespace tauplus {

inline constexpr int kMaxReductionLevels = 7;

// One CSA level. Carries out of column 2q are folded: bit c into column 0 and
// bit ~c into column 2q-2.
struct LevelPlan {
  std::vector<int> fa, ha;  // per column
  std::vector<int> depth_before, depth_after;
  int spills = 0;  // fa[2q] + ha[2q]

  double fa_equivalent() const;
};

struct ReductionPlan {
  unsigned q = 0;
  unsigned width = 0;
  unsigned fold_column = 0;  // 2q - 2
  Int pair_modulus;
  std::vector<int> initial_profile;
  std::vector<LevelPlan> levels;
  std::vector<int> final_profile;
  // Matrix constant minus 2^(2q-2) per folded carry, reduced mod m2 m3.
  Int folded_constant;

  int total_spills() const;
  int max_depth(std::size_t level) const;  // 0 = initial profile
};

class planning_error : public std::runtime_error {
 public:
  planning_error(const std::string& what, std::vector<int> achieved)
      : std::runtime_error(what), achieved_profile(std::move(achieved)) {}

  std::vector<int> achieved_profile;
};

// Depth of a column after a level: d - 2 fa - ha + carries arriving from below.
int column_after(int depth, int fa, int ha, int carries_in);

// Applies per-column FA/HA counts to a ring profile of width 2q+1.
std::vector<int> apply_level(const std::vector<int>& depth, const std::vector<int>& fa,
                             const std::vector<int>& ha, unsigned fold_column);

ReductionPlan plan_reduction(const BitMatrix& matrix);

struct RowPair {
  Int sum_row;
  Int carry_row;
};

// Bit-exact application of every adder and fold.
RowPair simulate_plan(const ReductionPlan& plan, const BitMatrix& matrix, const ResidueVector& rv);

// (sum_row + carry_row + folded constant) mod m2 m3
Int plan_value(const ReductionPlan& plan, const RowPair& rows);

struct FaReport {
  std::vector<double> level_totals;  // FA-equivalents, HA = 1/2
  double grand_total = 0;
  std::vector<double> reference_levels;  // 5q+8, 3q+12, 3q, 2q, q+3, q/2+4, 5
  double reference_level_sum = 0;        // 14.5q + 32
  double reference_grand_total = 0;      // 13.5q + 32
};

std::vector<double> reference_level_formulas(unsigned q);

FaReport fa_count_report(const ReductionPlan& plan);

// level,column,depth_before,fa,ha,depth_after,spills
std::string plan_csv(const ReductionPlan& plan);

}  // namespace tauplus
