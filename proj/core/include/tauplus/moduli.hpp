// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tauplus/integer.hpp"

namespace tauplus {

// {2^(2q+1), 2^q + 2^(q-1) - 1, 2^q + 2^(q-1) + 1}
struct TauPlusSet {
  unsigned q;
  Int m1, m2, m3;
  Int pair_modulus;  // m2 * m3
  Int dr;            // m1 * m2 * m3
  Int mu1;           // inverse of m1 modulo m2 * m3
  Int mu2;           // inverse of m3 modulo m2
};

// {2^q', 2^q' - 1, 2^q' + 1}
struct TauSet {
  unsigned qp;
  Int m1, m2, m3;
  Int dr;
};

inline constexpr unsigned kMinQ = 3;

TauPlusSet make_tau_plus(unsigned q);
TauSet make_tau(unsigned qp);

Int dynamic_range(const TauPlusSet& set);
Int dynamic_range_closed_form(unsigned q);

struct IdentityCheck {
  enum class Status { pass, fail, skipped };
  char label;  // 'a' .. 'h'
  Status status;
  std::string detail;  // witness values on failure, reason on skip
};

struct IdentityReport {
  unsigned q;
  std::vector<IdentityCheck> checks;

  bool ok() const;
  const IdentityCheck& at(char label) const;
};

// Auxiliary identities used by the reverse-converter derivation.
IdentityReport verify_appendix_identities(unsigned q, std::uint64_t seed = 1);

}  // namespace tauplus
