//
// Copyright 2026 The Herald Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: instance validation, the exact cover oracle,
// single simulations, the experiment sweeps, the audit suite, and golden
// fixture export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "herald/audit.hpp"
#include "herald/baselines.hpp"
#include "herald/error.hpp"
#include "herald/experiment.hpp"
#include "herald/fixtures.hpp"
#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/oracle.hpp"
#include "herald/payment.hpp"
#include "herald/rng.hpp"
#include "herald/scorefn.hpp"
#include "herald/selection.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_task_list(const std::string& csv) {
  std::vector<int> tasks;
  std::string token;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) tasks.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return tasks;
}

// Pinned matching when the instance has one; otherwise a seeded draw.
herald::MatchingSet resolve_matching(const herald::Instance& inst, const herald::BidProfile& bids,
                                     const std::string& score, double epsilon,
                                     std::uint64_t seed, bool constrained) {
  if (!inst.fixed_matching.empty()) return herald::matching_from_fixed(inst, bids);
  const auto dist = herald::matching_probabilities(bids, herald::score_kind_from_string(score),
                                                   epsilon, inst.b_max);
  return herald::match(inst, bids, dist, seed,
                       constrained ? herald::MatchMode::kConstrained
                                   : herald::MatchMode::kDpPure);
}

void emit_report(const json& j, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Privacy-preserving reverse-auction simulator for uncertain crowd-sensing tasks"};
  app.require_subcommand(1);

  // ---- validate ----------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "Check an instance file against the structural constraints");
  std::string v_instance;
  validate->add_option("--instance", v_instance, "instance JSON file")->required();
  validate->callback([&] {
    const auto inst = herald::load_instance_file(v_instance);
    const auto rep = herald::validate_instance(inst);
    if (rep.ok()) {
      std::cout << "valid\n";
    } else {
      for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
      throw CLI::RuntimeError(1);
    }
  });

  // ---- oracle -------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "Exact or Monte Carlo minimum-cover cost");
  std::string o_instance, o_mode = "exact", o_tasks, o_score = "lin";
  int o_k = 1;
  std::int64_t o_samples = 10000;
  std::uint64_t o_seed = 1;
  double o_epsilon = 0.1;
  oracle->add_option("--instance", o_instance, "instance JSON file")->required();
  oracle->add_option("--k", o_k, "simultaneous arrivals (expected-cost mode)");
  oracle->add_option("--mode", o_mode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
  oracle->add_option("--samples", o_samples, "Monte Carlo sample count");
  oracle->add_option("--seed", o_seed, "seed for matching and sampling");
  oracle->add_option("--tasks", o_tasks, "explicit arrival tasks, e.g. 0,2,4 (overrides --k)");
  oracle->add_option("--epsilon", o_epsilon, "epsilon for sampled matching");
  oracle->add_option("--score", o_score, "score kind for sampled matching");
  oracle->callback([&] {
    const auto inst = herald::load_instance_file(o_instance);
    const auto bids = herald::BidProfile::truthful(inst);
    const auto p = resolve_matching(inst, bids, o_score, o_epsilon, o_seed, false);
    if (!o_tasks.empty()) {
      const auto result = herald::min_cover_cost(inst, p, parse_task_list(o_tasks));
      std::printf("cost %.6f\n", result.cost);
      for (int idx : result.cover) {
        const auto& pair = p.pairs[static_cast<std::size_t>(idx)];
        std::printf("cover subset=%d worker=%d bid=%.6f\n", pair.subset, pair.worker, pair.bid);
      }
      return;
    }
    const auto mode = o_mode == "exact" ? herald::ExpectationMode::kExactEnum
                                        : herald::ExpectationMode::kMonteCarlo;
    const auto e = herald::expected_opt_cost(inst, p, herald::ArrivalModel{o_k}, mode, o_samples, o_seed);
    std::printf("expected_opt_cost %.6f\n", e.value);
    std::printf("threshold %.6f\n", 64.0 * e.value);
    if (e.mode == herald::ExpectationMode::kMonteCarlo)
      std::printf("std_error %.6f samples %lld\n", e.std_error, static_cast<long long>(e.samples));
  });

  // ---- simulate -------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "Run one mechanism on one instance");
  std::string s_instance, s_mechanism = "herald", s_score = "lin", s_out;
  double s_epsilon = 0.1;
  int s_k = 1, s_runs = 1;
  std::uint64_t s_seed = 1;
  bool s_no_timings = false;
  simulate->add_option("--instance", s_instance, "instance JSON file")->required();
  simulate->add_option("--mechanism", s_mechanism, "herald|cone|cosy")
      ->check(CLI::IsMember({"herald", "cone", "cosy"}));
  simulate->add_option("--score", s_score, "lin|log")->check(CLI::IsMember({"lin", "log"}));
  simulate->add_option("--epsilon", s_epsilon, "privacy parameter");
  simulate->add_option("--k", s_k, "simultaneous arrivals");
  simulate->add_option("--seed", s_seed, "master seed");
  simulate->add_option("--runs", s_runs, "independent repetitions");
  simulate->add_option("--out", s_out, "output CSV path");
  simulate->add_flag("--no-timings", s_no_timings, "zero the wall-clock columns (byte-reproducible output)");
  simulate->callback([&] {
    const auto inst = herald::load_instance_file(s_instance);
    const auto mech = herald::mechanism_from_string(s_mechanism);
    const auto kind = herald::score_kind_from_string(s_score);
    const auto thr_mode = inst.n <= 24 ? herald::ExpectationMode::kExactEnum
                                       : herald::ExpectationMode::kMonteCarlo;
    std::ostringstream csv;
    csv << herald::run_csv_header() << "\n";
    const herald::Rng root(s_seed);
    for (int r = 0; r < s_runs; ++r) {
      auto rec = herald::simulate_run(inst, mech, kind, s_epsilon, s_k,
                                      root.stream(static_cast<std::uint64_t>(r)).next_u64(),
                                      thr_mode, 10000, !s_no_timings);
      rec.run_id = r;
      csv << herald::run_csv_row(rec) << "\n";
    }
    if (s_out.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream(s_out) << csv.str();
      std::cout << "wrote " << s_out << "\n";
    }
  });

  // ---- experiment -------------------------------------------------------------
  auto* experiment = app.add_subcommand("experiment", "Sweep a simulation setting and write CSVs");
  std::string e_setting = "I", e_scale = "desk", e_out = "out", e_protocol = "shared";
  int e_runs = 100, e_k = 1;
  std::uint64_t e_seed = 1;
  bool e_no_timings = false;
  std::string e_epsilons;
  experiment->add_option("--setting", e_setting, "I|II|III|IV")
      ->check(CLI::IsMember({"I", "II", "III", "IV"}));
  experiment->add_option("--scale", e_scale, "paper|desk")->check(CLI::IsMember({"paper", "desk"}));
  experiment->add_option("--runs", e_runs, "runs per sweep point");
  experiment->add_option("--seed", e_seed, "master seed");
  experiment->add_option("--k", e_k, "simultaneous arrivals");
  experiment->add_option("--out", e_out, "output directory");
  experiment->add_option("--protocol", e_protocol, "shared|independent baseline matching")
      ->check(CLI::IsMember({"shared", "independent"}));
  experiment->add_flag("--no-timings", e_no_timings, "zero the wall-clock columns (byte-reproducible output)");

  auto* eps_sweep = experiment->add_subcommand("eps-sweep", "Repeat the sweep for several epsilons");
  eps_sweep->fallthrough();  // --setting/--runs/... stay on the parent
  eps_sweep->add_option("--epsilons", e_epsilons, "comma-separated list, e.g. 0.1,0.3")->required();

  experiment->callback([&] {
    auto cfg = herald::ScenarioConfig::preset(
        herald::setting_from_string(e_setting),
        e_scale == "desk" ? herald::Scale::kDesk : herald::Scale::kPaper, e_runs, e_seed);
    cfg.k = e_k;
    cfg.record_timings = !e_no_timings;
    cfg.protocol = e_protocol == "shared" ? herald::MatchProtocol::kShared
                                          : herald::MatchProtocol::kIndependent;
    herald::ExperimentOutput out;
    if (*eps_sweep) {
      std::vector<double> epsilons;
      std::string token;
      for (char c : e_epsilons + ",") {
        if (c == ',') {
          if (!token.empty()) epsilons.push_back(std::stod(token));
          token.clear();
        } else {
          token += c;
        }
      }
      out = herald::epsilon_sweep(cfg, epsilons, e_out);
    } else {
      out = herald::run_setting(cfg, e_out);
    }
    for (const auto& f : out.run_csvs) std::cout << "wrote " << f << "\n";
    for (const auto& f : out.agg_csvs) std::cout << "wrote " << f << "\n";
    std::cout << "wrote " << out.manifest_path << "\n";
    std::cout << "wrote " << out.plot_script_path << "\n";
  });

  // ---- audit -------------------------------------------------------------
  auto* audit = app.add_subcommand("audit", "Mechanized checks of the mechanism's guarantees");
  audit->require_subcommand(1);
  std::string a_instance, a_score = "lin", a_out;
  double a_epsilon = 0.1;
  int a_grid = 50, a_k = 1;
  std::int64_t a_seeds = 100;
  std::uint64_t a_seed = 1;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    auto* opt = sub->add_option("--instance", a_instance, "instance JSON file");
    if (needs_instance) opt->required();
    sub->add_option("--epsilon", a_epsilon, "privacy parameter");
    sub->add_option("--score", a_score, "lin|log")->check(CLI::IsMember({"lin", "log"}));
    sub->add_option("--grid", a_grid, "deviation / profile grid size");
    sub->add_option("--seeds", a_seeds, "number of seeded repetitions");
    sub->add_option("--seed", a_seed, "master seed");
    sub->add_option("--k", a_k, "simultaneous arrivals");
    sub->add_option("--out", a_out, "write the JSON report here");
  };

  auto* audit_dp = audit->add_subcommand("dp", "Exact privacy-ratio audit (small instances)");
  add_common(audit_dp, true);
  audit_dp->callback([&] {
    const auto inst = herald::load_instance_file(a_instance);
    const auto rep = herald::dp_exact_audit(inst, herald::score_kind_from_string(a_score),
                                            a_epsilon, a_grid, a_seed);
    json j{{"audit", "dp"},
           {"epsilon", rep.epsilon},
           {"score", herald::to_string(rep.kind)},
           {"m", rep.m},
           {"l", rep.l},
           {"worst_ratio", rep.worst_ratio},
           {"bound_proven", rep.bound_proven},
           {"bound_stated", rep.bound_stated},
           {"profiles", rep.profiles},
           {"neighbor_pairs", rep.neighbor_pairs},
           {"outcomes", rep.outcomes},
           {"pass", rep.pass}};
    std::cout << "dp audit: worst ratio " << rep.worst_ratio << " vs proven bound "
              << rep.bound_proven << " (stated " << rep.bound_stated << ") -> "
              << (rep.pass ? "PASS" : "FAIL") << "\n";
    emit_report(j, a_out);
    if (!rep.pass) throw CLI::RuntimeError(1);
  });

  auto* audit_truth = audit->add_subcommand("truth", "Deviation sweep under a fixed matching");
  add_common(audit_truth, true);
  audit_truth->callback([&] {
    const auto inst = herald::load_instance_file(a_instance);
    const auto bids = herald::BidProfile::truthful(inst);
    const auto p = resolve_matching(inst, bids, a_score, a_epsilon, a_seed, true);
    const auto thr_mode = inst.n <= 24 ? herald::ExpectationMode::kExactEnum
                                       : herald::ExpectationMode::kMonteCarlo;
    double worst_gain = 0.0;
    int worst_worker = -1;
    json workers = json::array();
    for (int w = 0; w < inst.num_workers(); ++w) {
      const auto rep = herald::truthfulness_audit(inst, p, w, a_grid, herald::ArrivalModel{a_k},
                                                  thr_mode, std::nullopt, 10000, a_seed);
      workers.push_back({{"worker", w},
                         {"truthful_utility", rep.truthful_utility},
                         {"best_deviation_utility", rep.best_deviation_utility},
                         {"best_deviation_bid", rep.best_deviation_bid},
                         {"max_gain", rep.max_gain}});
      if (rep.max_gain > worst_gain) {
        worst_gain = rep.max_gain;
        worst_worker = w;
      }
    }
    const bool pass = worst_gain <= 1e-9;
    json j{{"audit", "truth"}, {"grid", a_grid},      {"k", a_k},
           {"worst_gain", worst_gain}, {"worst_worker", worst_worker}, {"pass", pass},
           {"workers", workers}};
    std::cout << "truthfulness audit: max deviation gain " << worst_gain << " -> "
              << (pass ? "PASS" : "FAIL") << "\n";
    emit_report(j, a_out);
    if (!pass) throw CLI::RuntimeError(1);
  });

  auto* audit_ir = audit->add_subcommand("ir", "Individual-rationality fuzz over seeded auctions");
  add_common(audit_ir, true);
  audit_ir->callback([&] {
    const auto inst = herald::load_instance_file(a_instance);
    const auto rep = herald::ir_audit(inst, herald::score_kind_from_string(a_score), a_epsilon,
                                      a_k, a_seeds, a_seed);
    json j{{"audit", "ir"},
           {"runs", rep.runs},
           {"winning_contributions", rep.winning_contributions},
           {"violations", rep.violations},
           {"pass", rep.pass()}};
    std::cout << "ir audit: " << rep.runs << " runs, " << rep.violations.size()
              << " violations -> " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    emit_report(j, a_out);
    if (!rep.pass()) throw CLI::RuntimeError(1);
  });

  auto* audit_ratio = audit->add_subcommand("ratio", "Competitive-ratio ceiling check");
  add_common(audit_ratio, false);
  int r_n = 12, r_m = 8;
  audit_ratio->add_option("--n", r_n, "task count for generated instances");
  audit_ratio->add_option("--m", r_m, "worker count for generated instances");
  audit_ratio->callback([&] {
    herald::RatioReport rep;
    if (!a_instance.empty()) {
      const auto inst = herald::load_instance_file(a_instance);
      rep = herald::ratio_audit_instance(inst, herald::ArrivalModel{a_k});
    } else {
      herald::InstanceConfig icfg{r_n, r_m, r_m, {1.0, 5.0}, {(r_n + 2) / 3, r_n / 2}, 5.0};
      rep = herald::ratio_audit(icfg, herald::ArrivalModel{a_k},
                                herald::score_kind_from_string(a_score), a_epsilon, a_seeds,
                                a_seed);
    }
    json j{{"audit", "ratio"},
           {"n", rep.n},
           {"m", rep.m},
           {"l", rep.l},
           {"k", rep.k},
           {"seeds", rep.seeds},
           {"mean_mechanism_cost", rep.mean_mechanism_cost},
           {"mean_opt_cost", rep.mean_opt_cost},
           {"mean_ratio", rep.mean_ratio},
           {"ceiling", rep.ceiling},
           {"pass", rep.pass}};
    std::cout << "ratio audit: mean ratio " << rep.mean_ratio << " vs ceiling " << rep.ceiling
              << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";
    emit_report(j, a_out);
    if (!rep.pass) throw CLI::RuntimeError(1);
  });

  // ---- fixture -------------------------------------------------------------
  auto* fixture = app.add_subcommand("fixture", "Export an embedded golden case as instance JSON");
  std::string f_name = "example2-k1", f_out;
  fixture->add_option("--name", f_name, "golden case name");
  fixture->add_option("--out", f_out, "output path (stdout when omitted)");
  fixture->callback([&] {
    const auto g = herald::load_golden(f_name);
    if (f_out.empty()) {
      std::cout << herald::instance_to_json(g.instance);
    } else {
      herald::save_instance_file(g.instance, f_out);
      std::cout << "wrote " << f_out << "\n";
    }
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const herald::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
