// SPDX-License-Identifier: Apache-2.0
#include "tauplus/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tauplus/bit_matrix.hpp"
#include "tauplus/crt_oracle.hpp"
#include "tauplus/csa_schedule.hpp"
#include "tauplus/forward.hpp"
#include "tauplus/modular_adder.hpp"
#include "tauplus/random.hpp"
#include "tauplus/reverse.hpp"

namespace tauplus {

void SweepCounts::record(bool ok, const std::function<std::string()>& describe) {
  ++checked;
  if (ok)
    ++passed;
  else if (first_failure.empty())
    first_failure = describe();
}

void SweepCounts::merge(const SweepCounts& other) {
  checked += other.checked;
  passed += other.passed;
  if (first_failure.empty()) first_failure = other.first_failure;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

SweepCounts parallel_sweep(std::uint64_t n, unsigned workers,
                           const std::function<SweepCounts(std::uint64_t, std::uint64_t, std::uint64_t)>& fn) {
  if (workers == 0) workers = default_workers();
  const std::uint64_t chunks = (n + kSweepChunk - 1) / kSweepChunk;
  std::vector<SweepCounts> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        results[c] = fn(c, c * kSweepChunk, std::min(n, (c + 1) * kSweepChunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  // Merged in chunk order so first_failure is deterministic.
  SweepCounts total;
  for (const auto& r : results) total.merge(r);
  return total;
}

namespace {

void check_exhaustive(const TauPlusSet& set) {
  if (set.dr > pow2(kExhaustiveMaxBits))
    throw std::invalid_argument("exhaustive sweep needs dr <= 2^24; q=" + std::to_string(set.q) +
                                " has dr=" + to_string(set.dr));
}

// Calls body(x) for every operand of the sweep chunk.
template <class Body>
void for_operands(const TauPlusSet& set, const SweepSpec& spec, std::uint64_t chunk, std::uint64_t begin,
                  std::uint64_t end, Body&& body) {
  if (spec.mode == SweepMode::exhaustive) {
    for (std::uint64_t i = begin; i < end; ++i) body(Int(static_cast<unsigned long>(i)));
  } else {
    Rng rng(spec.seed, chunk);
    for (std::uint64_t i = begin; i < end; ++i) body(rng.below(set.dr));
  }
}

std::uint64_t operand_count(const TauPlusSet& set, const SweepSpec& spec) {
  if (spec.mode == SweepMode::exhaustive) {
    check_exhaustive(set);
    return set.dr.get_ui();
  }
  return spec.samples;
}

std::string describe_residues(const ResidueVector& rv) {
  return "(" + to_string(rv.x1) + "," + to_string(rv.x2) + "," + to_string(rv.x3) + ")";
}

}  // namespace

SweepCounts sweep_round_trip(const TauPlusSet& set, const SweepSpec& spec) {
  const ForwardConverter fwd(set);
  const ModulusList ms = tau_plus_moduli(set);
  return parallel_sweep(operand_count(set, spec), spec.workers, [&](auto chunk, auto begin, auto end) {
    SweepCounts counts;
    for_operands(set, spec, chunk, begin, end, [&](const Int& x) {
      const ResidueVector rv = fwd(x);
      const std::vector<Int> direct = residues_of(x, ms);
      const bool ok = rv.x1 == direct[0] && rv.x2 == direct[1] && rv.x3 == direct[2] &&
                      reverse_functional(rv, set) == x;
      counts.record(ok, [&] { return "X=" + to_string(x) + " residues " + describe_residues(rv); });
    });
    return counts;
  });
}

SweepCounts sweep_staged_forward(const TauPlusSet& set, const SweepSpec& spec) {
  const ForwardConverter fwd(set);
  return parallel_sweep(operand_count(set, spec), spec.workers, [&](auto chunk, auto begin, auto end) {
    SweepCounts counts;
    for_operands(set, spec, chunk, begin, end, [&](const Int& x) {
      bool ok = true;
      for (int ch : {2, 3}) {
        Int raw;
        const Int r = fwd.residue_staged(x, ch, &raw);
        const Int& m = ch == 2 ? set.m2 : set.m3;
        ok = ok && r == x % m && raw < 4 * m;
      }
      counts.record(ok, [&] { return "X=" + to_string(x); });
    });
    return counts;
  });
}

SweepCounts sweep_homomorphism(const TauPlusSet& set, std::uint64_t pairs, std::uint64_t seed, unsigned workers) {
  const ForwardConverter fwd(set);
  return parallel_sweep(pairs, workers, [&](auto chunk, auto begin, auto end) {
    SweepCounts counts;
    Rng rng(seed, chunk);
    for (auto i = begin; i < end; ++i) {
      const Int x = rng.below(set.dr);
      const Int y = rng.below(set.dr);
      const bool ok = fwd((x + y) % set.dr) == rns_add(fwd(x), fwd(y), set);
      counts.record(ok, [&] { return "X=" + to_string(x) + " Y=" + to_string(y); });
    }
    return counts;
  });
}

SweepCounts sweep_path_agreement(const TauPlusSet& set, std::uint64_t triples, std::uint64_t seed,
                                 unsigned workers) {
  const BitMatrix matrix = build_bit_matrix(set);
  const ReductionPlan plan = plan_reduction(matrix);
  auto check = [&](const ResidueVector& rv, SweepCounts& counts) {
    const Int xp = x_prime(rv, set);
    const bool ok = x_prime_eq9(rv, set) == xp && eval_bit_matrix(matrix, rv) == xp &&
                    plan_value(plan, simulate_plan(plan, matrix, rv)) == xp;
    counts.record(ok, [&] { return "residues " + describe_residues(rv); });
  };
  SweepCounts total = parallel_sweep(triples, workers, [&](auto chunk, auto begin, auto end) {
    SweepCounts counts;
    Rng rng(seed, chunk);
    for (auto i = begin; i < end; ++i) {
      ResidueVector rv{set.q, rng.below(set.m1), 0, 0};
      rv.x2 = rng.below(set.m2);
      rv.x3 = rng.below(set.m3);
      check(rv, counts);
    }
    return counts;
  });
  check({set.q, 0, 0, 0}, total);
  check({set.q, set.m1 - 1, set.m2 - 1, set.m3 - 1}, total);
  return total;
}

bool VerifyReport::ok() const {
  return round_trip.ok() && homomorphism.ok() && (!path_agreement_run || path_agreement.ok());
}

VerifyReport run_verify(unsigned q, const SweepSpec& spec) {
  const TauPlusSet set = make_tau_plus(q);
  VerifyReport rep;
  rep.q = q;
  rep.mode = spec.mode;
  const std::uint64_t n = operand_count(set, spec);
  rep.round_trip = sweep_round_trip(set, spec);
  rep.homomorphism = sweep_homomorphism(set, n, spec.seed ^ 0x686f6d6fULL, spec.workers);
  if (q >= kStructuralMinQ) {
    rep.path_agreement = sweep_path_agreement(set, n, spec.seed ^ 0x70617468ULL, spec.workers);
    rep.path_agreement_run = true;
  }
  return rep;
}

}  // namespace tauplus
