// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tauplus/integer.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

struct ResidueVector {
  unsigned q;
  Int x1;  // < 2^(2q+1)
  Int x2;  // < m2
  Int x3;  // < m3

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

// Throws std::invalid_argument on q mismatch, std::out_of_range on a residue outside its channel.
void validate(const ResidueVector& rv, const TauPlusSet& set);

Int mod_add(const Int& a, const Int& b, const Int& m);

// Folds the terms with mod_add, so every intermediate stays below 2m.
Int mod_multi_add(const std::vector<Int>& terms, const Int& m);

ResidueVector rns_add(const ResidueVector& u, const ResidueVector& v, const TauPlusSet& set);

}  // namespace tauplus
