// SPDX-License-Identifier: Apache-2.0
#include "tauplus/perf_model.hpp"

#include <sstream>
#include <stdexcept>

#include "tauplus/integer.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

std::string DelayExpression::str() const {
  return std::to_string(slope) + "k+" + std::to_string(intercept);
}

DelayExpression tau_delay(unsigned qp) {
  if (qp < 2) throw std::invalid_argument("q' must be at least 2");
  const int lg = ceil_log2(qp);
  return {18 + 4 * lg, 3 + 2 * lg};
}

DelayExpression tau_plus_delay(unsigned q) {
  if (q < kMinQ) throw std::invalid_argument("q must be at least 3");
  const int lg = ceil_log2(q);
  return {2 * static_cast<std::int64_t>(q) + 45 + 4 * lg, 4 + 2 * lg};
}

unsigned equalized_q_prime(unsigned q) {
  const Int dr = dynamic_range(make_tau_plus(q));
  unsigned qp = 2;
  while (make_tau(qp).dr < dr) ++qp;
  return qp;
}

std::int64_t turning_point(unsigned q) {
  const DelayExpression plus = tau_plus_delay(q);
  const DelayExpression base = tau_delay(equalized_q_prime(q));
  if (plus.intercept <= base.intercept) return 0;
  if (plus.slope >= base.slope)
    throw std::domain_error("tau+ delay never reaches tau delay for q=" + std::to_string(q));
  const std::int64_t gap = plus.intercept - base.intercept;
  const std::int64_t rate = base.slope - plus.slope;
  return (gap + rate - 1) / rate;
}

std::vector<ComparisonRow> comparison_table(const std::vector<unsigned>& qs) {
  std::vector<ComparisonRow> rows;
  for (unsigned q : qs) {
    const unsigned qp = equalized_q_prime(q);
    rows.push_back({q, qp, tau_plus_delay(q), tau_delay(qp), turning_point(q)});
  }
  return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "q,qprime,tauplus_intercept,tauplus_slope,tau_intercept,tau_slope,turning_k\n";
  for (const auto& r : rows)
    out << r.q << ',' << r.qp << ',' << r.tau_plus.intercept << ',' << r.tau_plus.slope << ','
        << r.tau.intercept << ',' << r.tau.slope << ',' << r.turning_k << '\n';
  return out.str();
}

}  // namespace tauplus
