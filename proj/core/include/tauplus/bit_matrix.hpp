// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tauplus/integer.hpp"
#include "tauplus/modular_adder.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

struct Cell {
  enum class Kind : std::uint8_t { zero, one, ref };

  Kind kind = Kind::zero;
  std::uint8_t source = 0;  // 1, 2 or 3 for x1, x2, x3
  std::uint16_t index = 0;
  bool inverted = false;

  static Cell constant(bool v) { return {v ? Kind::one : Kind::zero, 0, 0, false}; }
  static Cell ref(int source, unsigned index, bool inverted = false) {
    return {Kind::ref, static_cast<std::uint8_t>(source), static_cast<std::uint16_t>(index), inverted};
  }

  bool occupied() const { return kind != Kind::zero; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Thirteen rows over columns 0 .. 2q; rows[r][c] has weight 2^c.
struct BitMatrix {
  static constexpr int kRows = 13;

  unsigned q = 0;
  unsigned width = 0;  // 2q + 1
  Int pair_modulus;
  std::vector<std::vector<Cell>> rows;
  Int folded_constant;  // added to the row sum, already reduced mod pair_modulus
};

BitMatrix build_bit_matrix(const TauPlusSet& set);

bool cell_value(const Cell& cell, const ResidueVector& rv);

// Sum of all rows plus the folded constant, reduced mod m2 m3.
Int eval_bit_matrix(const BitMatrix& matrix, const ResidueVector& rv);

// Unreduced weighted sum of the rows.
Int row_sum(const BitMatrix& matrix, const ResidueVector& rv);

// Occupied cells per column, column 0 first.
std::vector<int> column_profile(const BitMatrix& matrix);

std::string format_cell(const Cell& cell);

// One row per line, cells separated by spaces, from column 2q down to column 0.
std::string dump_bit_matrix(const BitMatrix& matrix);

}  // namespace tauplus
