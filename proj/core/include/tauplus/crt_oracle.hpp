// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tauplus/integer.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

// Pairwise-coprime moduli, each >= 2. Checked on construction.
class ModulusList {
 public:
  explicit ModulusList(std::vector<Int> moduli);

  const std::vector<Int>& moduli() const { return moduli_; }
  std::size_t size() const { return moduli_.size(); }
  const Int& operator[](std::size_t i) const { return moduli_[i]; }
  const Int& product() const { return product_; }

 private:
  std::vector<Int> moduli_;
  Int product_;
};

struct EgcdResult {
  Int g, x, y;  // a*x + b*y = g
};

EgcdResult extended_gcd(const Int& a, const Int& b);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

std::vector<Int> residues_of(const Int& x, const ModulusList& ms);

// Garner mixed-radix reconstruction.
Int crt_reconstruct(const std::vector<Int>& rs, const ModulusList& ms);

// mu_i = (m_2 ... m_i) * inverse(m_1 ... m_i) modulo (m_{i+1} ... m_k), i = 1 .. k-1.
std::vector<Int> new_crt_coefficients(const ModulusList& ms);

// x_1 + m_1 * |sum mu_i (x_{i+1} - x_i)| mod (M / m_1).
Int new_crt_general(const std::vector<Int>& rs, const ModulusList& ms);

// Moduli in the order (2^q', 2^q' - 1, 2^q' + 1).
ModulusList tau_moduli(const TauSet& set);
ModulusList tau_plus_moduli(const TauPlusSet& set);

Int reverse_tau(const std::vector<Int>& rs, const TauSet& set);

}  // namespace tauplus
