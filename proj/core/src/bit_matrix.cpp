// SPDX-License-Identifier: Apache-2.0
#include "tauplus/bit_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "tauplus/reverse.hpp"

namespace tauplus {

namespace {

class RowBuilder {
 public:
  explicit RowBuilder(std::vector<Cell>& row) : row_(row) {}

  // Columns hi down to lo carry bits top, top-1, ... of the source.
  RowBuilder& seg(unsigned hi, unsigned lo, int source, unsigned top, bool inverted = false) {
    for (unsigned c = lo; c <= hi; ++c) row_.at(c) = Cell::ref(source, top - (hi - c), inverted);
    return *this;
  }
  RowBuilder& bit(unsigned col, int source, unsigned index, bool inverted = false) {
    return seg(col, col, source, index, inverted);
  }
  RowBuilder& one(unsigned col) {
    row_.at(col) = Cell::constant(true);
    return *this;
  }

 private:
  std::vector<Cell>& row_;
};

unsigned source_width(int source, unsigned q) { return source == 1 ? 2 * q + 1 : q + 1; }

}  // namespace

BitMatrix build_bit_matrix(const TauPlusSet& set) {
  const unsigned q = set.q;
  if (q < kStructuralMinQ) throw std::invalid_argument("bit matrix requires q >= 9, got " + std::to_string(q));
  BitMatrix m;
  m.q = q;
  m.width = 2 * q + 1;
  m.pair_modulus = set.pair_modulus;
  m.rows.assign(BitMatrix::kRows, std::vector<Cell>(m.width));
  constexpr bool inv = true;
  auto row = [&](int r) { return RowBuilder(m.rows[r - 1]); };

  row(1).seg(2 * q - 3, 0, 1, 2 * q, inv);
  row(2).seg(2 * q, 3, 1, 2 * q, inv);
  row(3).seg(2 * q, 2 * q - 2, 2, 2).bit(2 * q - 3, 2, q).one(2 * q - 4).bit(2 * q - 5, 2, q, inv)
      .seg(2 * q - 6, q - 1, 2, q - 1).seg(q - 4, 0, 2, q);
  row(4).seg(2 * q, 2 * q - 2, 2, 3, inv).seg(2 * q - 5, q, 2, q - 1).seg(q - 1, 3, 2, q).seg(2, 0, 1, 2, inv);
  row(5).bit(2 * q, 2, 0).seg(2 * q - 2, q + 2, 2, q).one(q - 1).one(q - 2).seg(q - 4, 0, 3, q);
  row(6).seg(2 * q - 1, q + 3, 2, q).seg(q - 1, 3, 3, q).seg(2, 0, 2, 3);
  row(7).bit(2 * q - 2, 2, 3, inv).seg(2 * q - 5, q - 1, 3, q, inv).seg(q - 2, q - 5, 2, 3).seg(3, 0, 3, 3);
  row(8).seg(2 * q, 2 * q - 2, 3, 3).seg(2 * q - 4, q, 3, q, inv).seg(q - 1, q - 4, 2, 3).seg(2, 0, 3, 3, inv);
  row(9).bit(2 * q, 3, 0, inv).seg(2 * q - 2, q + 2, 3, q, inv).seg(q + 1, q - 2, 2, 3).one(q - 4).bit(0, 2, 3);
  {
    RowBuilder r10 = row(10);
    r10.seg(2 * q - 1, q + 3, 3, q, inv).seg(q + 2, q - 1, 2, 3).seg(q - 2, q - 5, 3, 3, inv);
    for (unsigned c = 4; c <= q - 6; ++c) r10.one(c);
    r10.one(2).one(1);
  }
  row(11).seg(2 * q - 3, 2 * q - 6, 3, 3).seg(q - 1, q - 4, 3, 3, inv);
  row(12).seg(2 * q, 2 * q - 2, 1, 2, inv).seg(2 * q - 3, 2 * q - 5, 1, 2, inv).seg(q + 1, q - 2, 3, 3, inv);
  row(13).one(2 * q - 1).seg(2 * q - 3, 2 * q - 6, 2, 3).seg(q + 2, q - 1, 3, 3, inv);

  for (const auto& r : m.rows)
    for (const Cell& c : r)
      if (c.kind == Cell::Kind::ref && c.index >= source_width(c.source, q))
        throw std::logic_error("bit matrix cell references a bit beyond its residue width");

  // The all-zero code has X' = 0, which fixes the constant.
  m.folded_constant = 0;
  m.folded_constant = mod(-row_sum(m, ResidueVector{q, 0, 0, 0}), m.pair_modulus);
  return m;
}

bool cell_value(const Cell& cell, const ResidueVector& rv) {
  switch (cell.kind) {
    case Cell::Kind::zero:
      return false;
    case Cell::Kind::one:
      return true;
    case Cell::Kind::ref: {
      const Int& src = cell.source == 1 ? rv.x1 : cell.source == 2 ? rv.x2 : rv.x3;
      return bit(src, cell.index) != cell.inverted;
    }
  }
  return false;
}

Int row_sum(const BitMatrix& matrix, const ResidueVector& rv) {
  if (rv.q != matrix.q) throw std::invalid_argument("residue vector q does not match the matrix");
  Int total = 0;
  for (unsigned c = 0; c < matrix.width; ++c) {
    unsigned long n = 0;
    for (const auto& r : matrix.rows) n += cell_value(r[c], rv);
    if (n) total += Int(n) << static_cast<mp_bitcnt_t>(c);
  }
  return total;
}

Int eval_bit_matrix(const BitMatrix& matrix, const ResidueVector& rv) {
  return mod(row_sum(matrix, rv) + matrix.folded_constant, matrix.pair_modulus);
}

std::vector<int> column_profile(const BitMatrix& matrix) {
  std::vector<int> depth(matrix.width, 0);
  for (const auto& r : matrix.rows)
    for (unsigned c = 0; c < matrix.width; ++c) depth[c] += r[c].occupied();
  return depth;
}

std::string format_cell(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::zero:
      return "0";
    case Cell::Kind::one:
      return "1";
    case Cell::Kind::ref:
      return std::string(cell.inverted ? "~" : "") + "x" + std::to_string(cell.source) + "[" +
             std::to_string(cell.index) + "]";
  }
  return "?";
}

std::string dump_bit_matrix(const BitMatrix& matrix) {
  std::ostringstream out;
  for (const auto& r : matrix.rows) {
    for (unsigned i = 0; i < matrix.width; ++i) {
      if (i) out << ' ';
      out << format_cell(r[matrix.width - 1 - i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tauplus
