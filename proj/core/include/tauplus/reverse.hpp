// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tauplus/integer.hpp"
#include "tauplus/modular_adder.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

// Minimum q of the bracket evaluator and the bit matrix.
inline constexpr unsigned kStructuralMinQ = 9;

struct ResidueSplit {
  Int x1p, x1pp;  // x1 = 8 x1p + x1pp
  Int x2p, x2pp;  // x2 = 16 x2p + x2pp
  Int x3p, x3pp;  // x3 = 16 x3p + x3pp
};

ResidueSplit split_residues(const ResidueVector& rv, const TauPlusSet& set);

// Unique X23 < m2 m3 congruent to x2 mod m2 and x3 mod m3.
Int crt_pair_x23(const Int& x2, const Int& x3, const TauPlusSet& set);

// |mu1 (X23 - x1)| mod m2 m3
Int x_prime(const ResidueVector& rv, const TauPlusSet& set);

// x1 + 2^(2q+1) X'
Int reverse_functional(const ResidueVector& rv, const TauPlusSet& set);

// X' from the thirteen-term complement form, reduced mod m2 m3. Requires q >= 9.
Int x_prime_eq9(const ResidueVector& rv, const TauPlusSet& set);

// Requires q >= 5.
// |(3 2^(q-4) + 1) |mu2 m3 (x2 - x3)|_{m2 m3}|_{m2 m3}
Int x23_scaled(const Int& x2, const Int& x3, const TauPlusSet& set);
// |9 m3 (x2' - x3') + (3 2^(q-5) + mu2) m3 (x2'' - x3'')|_{m2 m3}
Int x23_scaled_closed_form(const Int& x2, const Int& x3, const TauPlusSet& set);

// A carry c out of weight 2^(2q) has weight 2^(2q+1) = 1 - 2^(2q-2) mod m2 m3, written as
// c + (1 - c) 2^(2q-2) - 2^(2q-2): one bit into column 0, its complement into column 2q-2,
// and a constant.
struct ReentrantFold {
  int low_bit;        // c, weight 2^0
  int high_bit;       // 1 - c, weight 2^(2q-2)
  unsigned high_col;  // 2q - 2
  Int constant;       // -2^(2q-2)

  Int value() const;  // signed contribution
};

ReentrantFold reentrant_fold(int c, const TauPlusSet& set);

}  // namespace tauplus
