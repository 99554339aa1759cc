// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include "tauplus/perf_model.hpp"

using namespace tauplus;

TEST_CASE("delay expressions") {
  CHECK(tau_delay(7) == DelayExpression{30, 9});
  CHECK(tau_delay(12) == DelayExpression{34, 11});
  CHECK(tau_delay(44) == DelayExpression{42, 15});
  CHECK(tau_plus_delay(4) == DelayExpression{61, 8});
  CHECK(tau_plus_delay(16) == DelayExpression{93, 12});
  CHECK(tau_plus_delay(32) == DelayExpression{129, 14});
  CHECK(tau_delay(7).str() == "9k+30");
}

TEST_CASE("equalized channel width") {
  CHECK(equalized_q_prime(4) == 7);
  CHECK(equalized_q_prime(8) == 12);
  CHECK(equalized_q_prime(16) == 23);
  CHECK(equalized_q_prime(32) == 44);
  unsigned prev = 0;
  for (unsigned q = 3; q <= 64; ++q) {
    const unsigned qp = equalized_q_prime(q);
    CHECK(qp >= prev);
    prev = qp;
  }
}

TEST_CASE("turning points") {
  CHECK(turning_point(4) == 31);
  CHECK(turning_point(8) == 39);
  CHECK(turning_point(16) == 55);
  CHECK(turning_point(32) == 87);
  CHECK(tau_plus_delay(4).at(31) == 309);
  CHECK(tau_delay(7).at(31) == 309);
  for (unsigned q : {4u, 8u, 16u, 32u}) {
    const auto k = turning_point(q);
    const auto plus = tau_plus_delay(q);
    const auto base = tau_delay(equalized_q_prime(q));
    CHECK(plus.at(k) <= base.at(k));
    CHECK(plus.at(k - 1) > base.at(k - 1));
  }
}

TEST_CASE("comparison table rows") {
  const auto rows = comparison_table({4, 8, 16, 32});
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].qp == 12);
  CHECK(rows[1].tau_plus.str() == "10k+73");
  CHECK(rows[1].tau.str() == "11k+34");
  CHECK(rows[1].turning_k == 39);
  CHECK(rows[0].tau_plus.str() == "8k+61");
  CHECK(rows[0].tau.str() == "9k+30");
  CHECK(rows[2].tau_plus.str() == "12k+93");
  CHECK(rows[2].tau.str() == "13k+38");
  CHECK(rows[3].tau.str() == "15k+42");
  const std::string csv = comparison_csv(rows);
  CHECK(csv.rfind("q,qprime,tauplus_intercept,tauplus_slope,tau_intercept,tau_slope,turning_k\n4,7,61,8,30,9,31\n", 0) ==
        0);
}
