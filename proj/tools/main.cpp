// SPDX-License-Identifier: Apache-2.0
// tauplus: conversion, verification sweeps and structural dumps for the
// {2^(2q+1), 2^q+2^(q-1)-1, 2^q+2^(q-1)+1} residue system.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "record.hpp"
#include "tauplus/csa_schedule.hpp"
#include "tauplus/forward.hpp"
#include "tauplus/moduli.hpp"
#include "tauplus/perf_model.hpp"
#include "tauplus/reverse.hpp"
#include "tauplus/verify.hpp"

using namespace tauplus;

namespace {

enum Exit { kPass = 0, kFailed = 1, kUsage = 2 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TauPlusSet set_for(unsigned q, unsigned min_q = kMinQ) {
  if (q < min_q) throw usage_error("q must be at least " + std::to_string(min_q) + ", got " + std::to_string(q));
  return make_tau_plus(q);
}

int cmd_info(unsigned q, bool json) {
  const TauPlusSet s = set_for(q);
  if (json) {
    std::cout << cli::to_json({{"q", Int(q)},
                               {"m1", s.m1},
                               {"m2", s.m2},
                               {"m3", s.m3},
                               {"mu1", s.mu1},
                               {"mu2", s.mu2},
                               {"pair_modulus", s.pair_modulus},
                               {"dr", s.dr}})
              << '\n';
    return kPass;
  }
  std::cout << "q            " << q << '\n'
            << "moduli       " << s.m1 << ' ' << s.m2 << ' ' << s.m3 << '\n'
            << "mu1          " << s.mu1 << '\n'
            << "mu2          " << s.mu2 << '\n'
            << "pair modulus " << s.pair_modulus << '\n'
            << "dr           " << s.dr << '\n';
  return kPass;
}

int cmd_forward(unsigned q, const std::string& x_text) {
  const TauPlusSet s = set_for(q);
  const Int x = parse_int(x_text);
  if (x >= s.dr) throw std::out_of_range("X=" + x_text + " outside [0, " + to_string(s.dr) + ")");
  std::cout << cli::residue_json(forward(x, s)) << '\n';
  return kPass;
}

int cmd_reverse(std::optional<unsigned> q, const std::vector<std::string>& residues, const std::string& path) {
  ResidueVector rv;
  if (residues.empty()) {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    rv = cli::parse_residue_json(text);
    if (q && *q != rv.q)
      throw usage_error("--q " + std::to_string(*q) + " disagrees with record q=" + std::to_string(rv.q));
  } else {
    if (!q) throw usage_error("--q is required when residues are given as arguments");
    if (residues.size() != 3) throw usage_error("reverse takes exactly three residues x1 x2 x3");
    rv = {*q, parse_int(residues[0]), parse_int(residues[1]), parse_int(residues[2])};
  }
  const TauPlusSet s = set_for(rv.q, path == "functional" ? kMinQ : kStructuralMinQ);
  validate(rv, s);
  Int x;
  if (path == "functional") {
    x = reverse_functional(rv, s);
  } else if (path == "eq9") {
    x = rv.x1 + s.m1 * x_prime_eq9(rv, s);
  } else {
    const BitMatrix m = build_bit_matrix(s);
    const ReductionPlan plan = plan_reduction(m);
    x = rv.x1 + s.m1 * plan_value(plan, simulate_plan(plan, m, rv));
  }
  std::cout << x << '\n';
  return kPass;
}

void print_counts(const char* label, const SweepCounts& c) {
  std::cout << label << ' ' << c.passed << '/' << c.checked << ' ' << (c.ok() ? "pass" : "FAIL") << '\n';
  if (!c.ok()) std::cout << "  first failure: " << c.first_failure << '\n';
}

int cmd_verify(unsigned q, const std::string& mode, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  set_for(q);
  SweepSpec spec{mode == "exhaustive" ? SweepMode::exhaustive : SweepMode::sample, n, seed, workers};
  if (spec.mode == SweepMode::sample && n == 0) throw usage_error("sample mode needs -n > 0");
  const VerifyReport r = run_verify(q, spec);
  std::cout << "q " << q << " mode " << mode << " seed " << seed << '\n';
  print_counts("round_trip", r.round_trip);
  print_counts("homomorphism", r.homomorphism);
  if (r.path_agreement_run)
    print_counts("path_agreement", r.path_agreement);
  else
    std::cout << "path_agreement skipped (q < " << kStructuralMinQ << ")\n";
  return r.ok() ? kPass : kFailed;
}

int cmd_matrix(unsigned q) {
  std::cout << dump_bit_matrix(build_bit_matrix(set_for(q, kStructuralMinQ)));
  return kPass;
}

int cmd_schedule(unsigned q, bool report) {
  const ReductionPlan plan = plan_reduction(build_bit_matrix(set_for(q, kStructuralMinQ)));
  if (!report) {
    std::cout << plan_csv(plan);
    return kPass;
  }
  const FaReport r = fa_count_report(plan);
  std::cout << "level,fa_equivalent,reference\n";
  for (std::size_t i = 0; i < r.level_totals.size() || i < r.reference_levels.size(); ++i) {
    std::cout << i + 1 << ',';
    if (i < r.level_totals.size()) std::cout << r.level_totals[i];
    std::cout << ',';
    if (i < r.reference_levels.size()) std::cout << r.reference_levels[i];
    std::cout << '\n';
  }
  std::cout << "total," << r.grand_total << ',' << r.reference_level_sum << '\n'
            << "reference_grand_total,," << r.reference_grand_total << '\n';
  return kPass;
}

int cmd_perf(const std::vector<unsigned>& qs) {
  for (unsigned q : qs) set_for(q);
  std::cout << comparison_csv(comparison_table(qs));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tauplus residue number system toolkit"};
  app.require_subcommand(1);

  unsigned q = 0;
  bool json = false;
  auto* info = app.add_subcommand("info", "Print moduli, inverses and dynamic range");
  info->add_option("--q", q, "Set parameter")->required();
  info->add_flag("--json", json, "Emit a JSON record");

  std::string x_text;
  auto* fwd = app.add_subcommand("forward", "Binary to residues (JSON record)");
  fwd->add_option("--q", q)->required();
  fwd->add_option("x", x_text, "Decimal integer in [0, dr)")->required();

  std::optional<unsigned> rq;
  std::vector<std::string> residues;
  std::string path = "functional";
  auto* rev = app.add_subcommand("reverse", "Residues to binary; reads a JSON record from stdin without arguments");
  rev->add_option("--q", rq);
  rev->add_option("residues", residues, "x1 x2 x3");
  rev->add_option("--path", path)->check(CLI::IsMember({"functional", "eq9", "matrix"}));

  std::string mode = "sample";
  std::uint64_t n = 0, seed = 1;
  unsigned workers = 0;
  auto* ver = app.add_subcommand("verify", "Round-trip, homomorphism and reverse-path sweeps");
  ver->add_option("--q", q)->required();
  ver->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  ver->add_option("-n", n, "Sample count (sample mode)");
  ver->add_option("--seed", seed);
  ver->add_option("--workers", workers, "Worker threads (0 = available parallelism)")->envname("RNS_WORKERS");

  auto* mat = app.add_subcommand("matrix", "Dump the thirteen-row bit matrix, weight 2^2q first");
  mat->add_option("--q", q)->required();

  bool report = false;
  auto* sch = app.add_subcommand("schedule", "CSA reduction plan as CSV");
  sch->add_option("--q", q)->required();
  sch->add_flag("--report", report, "Per-level FA-equivalent totals instead of the plan");

  std::vector<unsigned> qs;
  auto* perf = app.add_subcommand("perf", "Delay model comparison as CSV");
  perf->add_option("--q", qs)->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*info) return cmd_info(q, json);
    if (*fwd) return cmd_forward(q, x_text);
    if (*rev) return cmd_reverse(rq, residues, path);
    if (*ver) return cmd_verify(q, mode, n, seed, workers);
    if (*mat) return cmd_matrix(q);
    if (*sch) return cmd_schedule(q, report);
    if (*perf) return cmd_perf(qs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
