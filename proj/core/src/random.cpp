// SPDX-License-Identifier: Apache-2.0
#include "tauplus/random.hpp"

#include <stdexcept>

namespace tauplus {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % n;
}

Int Rng::below(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("Rng::below requires a positive bound");
  const unsigned long nbits = bit_length(n);
  const unsigned long words = (nbits + 63) / 64;
  Int v;
  do {
    v = 0;
    for (unsigned long w = 0; w < words; ++w) {
      Int word;
      std::uint64_t r = next();
      mpz_import(word.get_mpz_t(), 1, 1, sizeof r, 0, 0, &r);
      v += word << static_cast<mp_bitcnt_t>(64 * w);
    }
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), nbits);
  } while (v >= n);
  return v;
}

}  // namespace tauplus
