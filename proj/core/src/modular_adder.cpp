// SPDX-License-Identifier: Apache-2.0
#include "tauplus/modular_adder.hpp"

#include <stdexcept>

namespace tauplus {

void validate(const ResidueVector& rv, const TauPlusSet& set) {
  if (rv.q != set.q)
    throw std::invalid_argument("residue vector q=" + std::to_string(rv.q) + " used with q=" +
                                std::to_string(set.q));
  auto in_range = [](const Int& x, const Int& m, const char* name) {
    if (x < 0 || x >= m)
      throw std::out_of_range(std::string(name) + "=" + to_string(x) + " outside [0, " + to_string(m) + ")");
  };
  in_range(rv.x1, set.m1, "x1");
  in_range(rv.x2, set.m2, "x2");
  in_range(rv.x3, set.m3, "x3");
}

Int mod_add(const Int& a, const Int& b, const Int& m) {
  if (a < 0 || b < 0 || a >= m || b >= m)
    throw std::out_of_range("mod_add operand outside [0, " + to_string(m) + ")");
  Int s = a + b;
  if (s >= m) s -= m;
  return s;
}

Int mod_multi_add(const std::vector<Int>& terms, const Int& m) {
  if (terms.empty()) throw std::invalid_argument("mod_multi_add of an empty list");
  Int acc = 0;
  for (const Int& t : terms) acc = mod_add(acc, t, m);
  return acc;
}

ResidueVector rns_add(const ResidueVector& u, const ResidueVector& v, const TauPlusSet& set) {
  validate(u, set);
  validate(v, set);
  return {set.q, mod_add(u.x1, v.x1, set.m1), mod_add(u.x2, v.x2, set.m2), mod_add(u.x3, v.x3, set.m3)};
}

}  // namespace tauplus
