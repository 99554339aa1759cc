// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tauplus {

// intercept + slope * k, in gate delays.
struct DelayExpression {
  std::int64_t intercept = 0;
  std::int64_t slope = 0;

  std::int64_t at(std::int64_t k) const { return intercept + slope * k; }
  std::string str() const;  // e.g. "9k+30"
  friend bool operator==(const DelayExpression&, const DelayExpression&) = default;
};

// Forward conversion + k additions + reverse conversion.
DelayExpression tau_delay(unsigned qp);
DelayExpression tau_plus_delay(unsigned q);

// Smallest q' with 2^(3q') - 2^q' >= DR of the q set.
unsigned equalized_q_prime(unsigned q);

// Least k >= 0 with tau_plus_delay(q).at(k) <= tau_delay(equalized_q_prime(q)).at(k).
// Throws std::domain_error when the slopes never allow it.
std::int64_t turning_point(unsigned q);

struct ComparisonRow {
  unsigned q;
  unsigned qp;
  DelayExpression tau_plus;
  DelayExpression tau;
  std::int64_t turning_k;
};

std::vector<ComparisonRow> comparison_table(const std::vector<unsigned>& qs);

// q,qprime,tauplus_intercept,tauplus_slope,tau_intercept,tau_slope,turning_k
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace tauplus
