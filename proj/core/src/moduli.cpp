// SPDX-License-Identifier: Apache-2.0
#include "tauplus/moduli.hpp"

#include <stdexcept>

#include "tauplus/random.hpp"

namespace tauplus {

TauPlusSet make_tau_plus(unsigned q) {
  if (q < kMinQ) throw std::invalid_argument("q must be at least 3, got " + std::to_string(q));
  TauPlusSet s;
  s.q = q;
  s.m1 = pow2(2 * q + 1);
  s.m2 = pow2(q) + pow2(q - 1) - 1;
  s.m3 = pow2(q) + pow2(q - 1) + 1;
  s.pair_modulus = s.m2 * s.m3;
  s.dr = s.m1 * s.pair_modulus;
  s.mu2 = 3 * pow2(q - 2);
  s.mu1 = 9 * pow2(2 * q - 5) + 1;
  return s;
}

TauSet make_tau(unsigned qp) {
  if (qp < 2) throw std::invalid_argument("q' must be at least 2, got " + std::to_string(qp));
  TauSet s;
  s.qp = qp;
  s.m1 = pow2(qp);
  s.m2 = pow2(qp) - 1;
  s.m3 = pow2(qp) + 1;
  s.dr = s.m1 * s.m2 * s.m3;
  return s;
}

Int dynamic_range(const TauPlusSet& set) { return set.m1 * set.m2 * set.m3; }

Int dynamic_range_closed_form(unsigned q) {
  if (q < kMinQ) throw std::invalid_argument("q must be at least 3");
  return pow2(4 * q + 2) + pow2(4 * q - 1) - pow2(2 * q + 1);
}

bool IdentityReport::ok() const {
  for (const auto& c : checks)
    if (c.status == IdentityCheck::Status::fail) return false;
  return true;
}

const IdentityCheck& IdentityReport::at(char label) const {
  for (const auto& c : checks)
    if (c.label == label) return c;
  throw std::out_of_range(std::string("no identity ") + label);
}

namespace {

IdentityCheck check(char label, bool ok, const std::string& witness) {
  return {label, ok ? IdentityCheck::Status::pass : IdentityCheck::Status::fail, ok ? "" : witness};
}

}  // namespace

IdentityReport verify_appendix_identities(unsigned q, std::uint64_t seed) {
  const TauPlusSet s = make_tau_plus(q);
  IdentityReport rep{q, {}};
  Rng rng(seed, q);

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < 1000 && ok; ++i) {
      const Int m = 1 + rng.below(std::uint64_t{0xffff});
      const Int mp = 1 + rng.below(std::uint64_t{0xffff});
      const Int z = rng.below(pow2(48));
      if (m * mod(z, mp) != mod(m * z, m * mp)) {
        ok = false;
        witness = "m=" + to_string(m) + " m'=" + to_string(mp) + " Z=" + to_string(z);
      }
    }
    rep.checks.push_back(check('a', ok, witness));
  }

  rep.checks.push_back(check('b', mod(s.mu2 * s.m3, s.m2) == 1,
                             "|mu2*m3| mod m2 = " + to_string(mod(s.mu2 * s.m3, s.m2))));
  rep.checks.push_back(check('c', 2 * s.mu2 == s.m2 + 1, "2*mu2 = " + to_string(2 * s.mu2)));

  for (char label : {'d', 'e'}) {
    const Int& m = label == 'd' ? s.m2 : s.m3;
    bool ok = true;
    std::string witness;
    for (int i = 0; i < 1000 && ok; ++i) {
      const Int x = rng.below(m);
      const Int hi = bits(x, 4, q - 3), lo = bits(x, 0, 4);
      if (16 * hi + lo != x || bit_length(x) > q + 1) {
        ok = false;
        witness = "x=" + to_string(x);
      }
    }
    rep.checks.push_back(check(label, ok, witness));
  }

  rep.checks.push_back(check('f', mod(s.mu1 * s.m1, s.pair_modulus) == 1,
                             "|mu1*m1| mod m2m3 = " + to_string(mod(s.mu1 * s.m1, s.pair_modulus))));
  rep.checks.push_back(check('g', mod(8 * s.mu1, s.pair_modulus) == 9,
                             "|8*mu1| mod m2m3 = " + to_string(mod(8 * s.mu1, s.pair_modulus))));

  if (q < 4) {
    rep.checks.push_back({'h', IdentityCheck::Status::skipped,
                          "2^(q-4) is fractional for q=" + std::to_string(q)});
  } else {
    const Int rhs = 3 * pow2(q - 4) * (s.m2 + 1) + 1;
    rep.checks.push_back(check('h', s.mu1 == rhs, "mu1=" + to_string(s.mu1) + " rhs=" + to_string(rhs)));
  }
  return rep;
}

}  // namespace tauplus
