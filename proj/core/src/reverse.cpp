// SPDX-License-Identifier: Apache-2.0
#include "tauplus/reverse.hpp"

#include <stdexcept>

namespace tauplus {

ResidueSplit split_residues(const ResidueVector& rv, const TauPlusSet& set) {
  validate(rv, set);
  const unsigned q = set.q;
  return {bits(rv.x1, 3, 2 * q - 2), bits(rv.x1, 0, 3), bits(rv.x2, 4, q - 3),
          bits(rv.x2, 0, 4),         bits(rv.x3, 4, q - 3), bits(rv.x3, 0, 4)};
}

Int crt_pair_x23(const Int& x2, const Int& x3, const TauPlusSet& set) {
  if (x2 < 0 || x2 >= set.m2) throw std::out_of_range("x2 outside [0, m2)");
  if (x3 < 0 || x3 >= set.m3) throw std::out_of_range("x3 outside [0, m3)");
  return x3 + set.m3 * mod(set.mu2 * (x2 - x3), set.m2);
}

Int x_prime(const ResidueVector& rv, const TauPlusSet& set) {
  validate(rv, set);
  return mod(set.mu1 * (crt_pair_x23(rv.x2, rv.x3, set) - rv.x1), set.pair_modulus);
}

Int reverse_functional(const ResidueVector& rv, const TauPlusSet& set) {
  return rv.x1 + set.m1 * x_prime(rv, set);
}

Int x_prime_eq9(const ResidueVector& rv, const TauPlusSet& set) {
  if (set.q < kStructuralMinQ)
    throw std::invalid_argument("complement-form evaluator requires q >= 9, got " + std::to_string(set.q));
  const ResidueSplit s = split_residues(rv, set);
  const unsigned q = set.q;
  const Int& x2 = rv.x2;
  const Int& x3 = rv.x3;
  auto b = [](const Int& v, unsigned i) { return Int(bit(v, i) ? 1 : 0); };
  auto nb = [](const Int& v, unsigned i) { return Int(bit(v, i) ? 0 : 1); };

  const Int nx1p = complement(s.x1p, 2 * q - 2);
  const Int nx1pp = complement(s.x1pp, 3);
  const Int nx3p = complement(s.x3p, q - 3);
  const Int nx3pp = complement(s.x3pp, 4);
  // Three-bit fields read as binary numbers.
  const Int x2_20 = bits(x2, 0, 3);
  const Int x2_31 = bits(x2, 1, 3);
  const Int x3_31 = bits(x3, 1, 3);
  const Int nx2_31 = complement(x2_31, 3);
  const Int nx3_31 = complement(x3_31, 3);

  Int sum = (pow2(q + 3) + pow2(q + 2) + pow2(q) + pow2(q - 1)) * (s.x2p + nx3p);
  sum += s.x3pp;
  sum += 9 * (nx1p + s.x2p + s.x3p);
  sum += pow2(2 * q - 2) * x2_20;
  sum += (pow2(2 * q - 2) + pow2(2 * q - 5) + 1) * nx1pp;
  sum += pow2(2 * q - 6) * (s.x2pp + s.x3pp);
  sum += pow2(2 * q - 2) * (nx2_31 + x3_31);
  sum += pow2(2 * q - 2) * nb(x2, 3) + b(x2, 3);
  sum += (pow2(q - 1) + pow2(q - 2) + pow2(q - 4) + pow2(q - 5)) * (s.x2pp + nx3pp);
  sum += nx3_31;
  sum += pow2(2 * q) * (b(x2, 0) + nb(x3, 0));
  sum += x2_31;
  sum += pow2(2 * q - 4) + pow2(2 * q - 5) + pow2(q - 1) + pow2(q - 2) + pow2(q - 4) + pow2(q - 5) - 9;
  return mod(sum, set.pair_modulus);
}

namespace {

void check_scaled_q(const TauPlusSet& set) {
  if (set.q < 5) throw std::invalid_argument("scaled pair form requires q >= 5");
}

}  // namespace

Int x23_scaled(const Int& x2, const Int& x3, const TauPlusSet& set) {
  check_scaled_q(set);
  const Int x23p = mod(set.mu2 * set.m3 * (x2 - x3), set.pair_modulus);
  return mod((3 * pow2(set.q - 4) + 1) * x23p, set.pair_modulus);
}

Int x23_scaled_closed_form(const Int& x2, const Int& x3, const TauPlusSet& set) {
  check_scaled_q(set);
  const Int dp = bits(x2, 4, set.q - 3) - bits(x3, 4, set.q - 3);
  const Int dpp = bits(x2, 0, 4) - bits(x3, 0, 4);
  return mod(9 * set.m3 * dp + (3 * pow2(set.q - 5) + set.mu2) * set.m3 * dpp, set.pair_modulus);
}

Int ReentrantFold::value() const {
  return Int(low_bit) + Int(high_bit) * pow2(high_col) + constant;
}

ReentrantFold reentrant_fold(int c, const TauPlusSet& set) {
  if (c != 0 && c != 1) throw std::invalid_argument("carry must be 0 or 1");
  const unsigned col = 2 * set.q - 2;
  return {c, 1 - c, col, -pow2(col)};
}

}  // namespace tauplus
