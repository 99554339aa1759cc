// SPDX-License-Identifier: Apache-2.0
#include "tauplus/crt_oracle.hpp"

#include <stdexcept>

namespace tauplus {

ModulusList::ModulusList(std::vector<Int> moduli) : moduli_(std::move(moduli)), product_(1) {
  if (moduli_.empty()) throw std::invalid_argument("empty modulus list");
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 2) throw std::invalid_argument("modulus below 2: " + to_string(moduli_[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (extended_gcd(moduli_[i], moduli_[j]).g != 1)
        throw std::invalid_argument("moduli not coprime: " + to_string(moduli_[j]) + ", " +
                                    to_string(moduli_[i]));
    product_ *= moduli_[i];
  }
}

EgcdResult extended_gcd(const Int& a, const Int& b) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int qt = r0 / r1;
    Int r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - qt * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - qt * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw std::domain_error("modulus must be positive");
  const EgcdResult e = extended_gcd(mod(a, m), m);
  if (e.g != 1) throw std::domain_error(to_string(a) + " has no inverse modulo " + to_string(m));
  return mod(e.x, m);
}

std::vector<Int> residues_of(const Int& x, const ModulusList& ms) {
  if (x < 0 || x >= ms.product())
    throw std::out_of_range("x outside [0, " + to_string(ms.product()) + ")");
  std::vector<Int> rs;
  rs.reserve(ms.size());
  for (const Int& m : ms.moduli()) rs.push_back(x % m);
  return rs;
}

namespace {

void check_residues(const std::vector<Int>& rs, const ModulusList& ms) {
  if (rs.size() != ms.size()) throw std::invalid_argument("residue count does not match modulus count");
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i] < 0 || rs[i] >= ms[i])
      throw std::out_of_range("residue " + to_string(rs[i]) + " outside [0, " + to_string(ms[i]) + ")");
}

}  // namespace

Int crt_reconstruct(const std::vector<Int>& rs, const ModulusList& ms) {
  check_residues(rs, ms);
  // x = v_0 + v_1 m_0 + v_2 m_0 m_1 + ...
  std::vector<Int> v(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    Int acc = 0, radix = 1;
    for (std::size_t j = 0; j < i; ++j) {
      acc += v[j] * radix;
      radix *= ms[j];
    }
    v[i] = mod((rs[i] - acc) * mod_inverse(radix, ms[i]), ms[i]);
  }
  Int x = 0, radix = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    x += v[i] * radix;
    radix *= ms[i];
  }
  return x;
}

std::vector<Int> new_crt_coefficients(const ModulusList& ms) {
  const std::size_t k = ms.size();
  std::vector<Int> mu;
  for (std::size_t i = 1; i < k; ++i) {
    Int head = 1, tail = 1;
    for (std::size_t j = 0; j < i; ++j) head *= ms[j];
    for (std::size_t j = i; j < k; ++j) tail *= ms[j];
    mu.push_back(head / ms[0] * mod_inverse(head, tail));
  }
  return mu;
}

Int new_crt_general(const std::vector<Int>& rs, const ModulusList& ms) {
  check_residues(rs, ms);
  if (ms.size() == 1) return rs[0];
  const std::vector<Int> mu = new_crt_coefficients(ms);
  Int acc = 0;
  for (std::size_t i = 0; i + 1 < rs.size(); ++i) acc += mu[i] * (rs[i + 1] - rs[i]);
  return rs[0] + ms[0] * mod(acc, ms.product() / ms[0]);
}

ModulusList tau_moduli(const TauSet& set) { return ModulusList({set.m1, set.m2, set.m3}); }

ModulusList tau_plus_moduli(const TauPlusSet& set) { return ModulusList({set.m1, set.m2, set.m3}); }

Int reverse_tau(const std::vector<Int>& rs, const TauSet& set) {
  return new_crt_general(rs, tau_moduli(set));
}

}  // namespace tauplus
