// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "tauplus/integer.hpp"

namespace tauplus {

std::uint64_t splitmix64(std::uint64_t x);

/*
 * Seeded, stream-splittable generator.
 *
 * Stream s of seed k is std::mt19937_64 seeded with splitmix64(k ^ splitmix64(s)).
 * Bounded draws consume raw 64-bit outputs only (no std distributions, whose
 * output is implementation-defined):
 *   below(n) for n <= 2^64: rejection on the top of the 64-bit space;
 *   below(Int n): ceil(bits(n)/64) words, least significant first, masked to
 *   bits(n) bits, rejected while >= n.
 * This mapping is part of the reporting contract and must stay stable.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);
  Int below(const Int& n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tauplus
