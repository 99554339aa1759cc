// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "tauplus/integer.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

struct SweepCounts {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::string first_failure;  // empty when none

  void record(bool ok, const std::function<std::string()>& describe);
  void merge(const SweepCounts& other);
  bool ok() const { return checked == passed; }
};

// Sample i of a sampled sweep comes from Rng(seed, i / kSweepChunk), drawn in order within
// its chunk, so results do not depend on the worker count.
inline constexpr std::uint64_t kSweepChunk = 1 << 14;
inline constexpr unsigned kExhaustiveMaxBits = 24;  // exhaustive sweeps need dr <= 2^24

unsigned default_workers();

// Runs fn over [0, n) split into kSweepChunk-sized chunks; fn(chunk, begin, end).
SweepCounts parallel_sweep(std::uint64_t n, unsigned workers,
                           const std::function<SweepCounts(std::uint64_t, std::uint64_t, std::uint64_t)>& fn);

enum class SweepMode { exhaustive, sample };

struct SweepSpec {
  SweepMode mode = SweepMode::sample;
  std::uint64_t samples = 0;  // sample mode only
  std::uint64_t seed = 1;
  unsigned workers = 0;       // 0 = default_workers()
};

// reverse_functional(forward(X)) == X and forward(X) matches direct remainders.
SweepCounts sweep_round_trip(const TauPlusSet& set, const SweepSpec& spec);

// Staged residues for both LUT channels equal direct remainders; the pre-reduction
// sum stays below 4 m.
SweepCounts sweep_staged_forward(const TauPlusSet& set, const SweepSpec& spec);

// forward((X + Y) mod dr) == rns_add(forward X, forward Y); always sampled.
SweepCounts sweep_homomorphism(const TauPlusSet& set, std::uint64_t pairs, std::uint64_t seed, unsigned workers);

// x_prime == x_prime_eq9 == eval_bit_matrix == planned CSA reduction, on random residue
// triples plus the all-zero and all-maximum triples. Requires q >= 9.
SweepCounts sweep_path_agreement(const TauPlusSet& set, std::uint64_t triples, std::uint64_t seed,
                                 unsigned workers);

struct VerifyReport {
  unsigned q = 0;
  SweepMode mode = SweepMode::sample;
  SweepCounts round_trip;
  SweepCounts homomorphism;
  SweepCounts path_agreement;  // empty for q < 9
  bool path_agreement_run = false;

  bool ok() const;
};

// Throws std::invalid_argument for an exhaustive request above the cap.
VerifyReport run_verify(unsigned q, const SweepSpec& spec);

}  // namespace tauplus
