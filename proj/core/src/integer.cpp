// SPDX-License-Identifier: Apache-2.0
#include "tauplus/integer.hpp"

#include <stdexcept>

namespace tauplus {

Int pow2(unsigned long e) {
  Int r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

Int bits(const Int& x, unsigned long lo, unsigned long len) {
  Int r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), lo);
  mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), len);
  return r;
}

Int complement(const Int& x, unsigned long width) {
  return pow2(width) - 1 - bits(x, 0, width);
}

unsigned long bit_length(const Int& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const Int& x) { return x.get_str(10); }

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(text));
  return Int(std::string(text), 10);
}

int ceil_log2(unsigned long n) {
  if (n == 0) throw std::invalid_argument("ceil_log2 of zero");
  int e = 0;
  while ((1UL << e) < n) ++e;
  return e;
}

}  // namespace tauplus
