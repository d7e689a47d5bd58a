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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/oracle.hpp"
#include "herald/scorefn.hpp"

namespace herald {

enum class Setting { kI, kII, kIII, kIV };
enum class Scale { kPaper, kDesk };
enum class Mechanism { kHerald, kCone, kCosy };

std::string to_string(Setting s);
std::string to_string(Mechanism m);
Setting setting_from_string(const std::string& name);
Mechanism mechanism_from_string(const std::string& name);

// Whether the baselines replay the exact matching sampled for the main
// mechanism (isolating the selection rule) or draw their own.
enum class MatchProtocol { kShared, kIndependent };

struct SweepPoint {
  std::string series;  // "" for single-series settings, else e.g. "cost_5_10"
  int index = 0;       // position within its series
  InstanceConfig icfg;
};

// A full sweep recipe: the grid of instance configurations for one
// simulation setting at one scale, plus run bookkeeping.
struct ScenarioConfig {
  Setting setting = Setting::kI;
  Scale scale = Scale::kDesk;
  std::vector<SweepPoint> points;
  double epsilon = 0.1;
  int k = 1;
  int runs = 100;
  std::uint64_t master_seed = 1;
  MatchProtocol protocol = MatchProtocol::kShared;
  // Exact enumeration at desk scale; Monte Carlo (10^4 samples) at paper
  // scale, where n exceeds the exact-oracle range for general k.
  ExpectationMode threshold_mode = ExpectationMode::kExactEnum;
  std::int64_t threshold_samples = 10000;
  bool record_timings = true;

  static ScenarioConfig preset(Setting setting, Scale scale, int runs, std::uint64_t seed);
};

// One simulation outcome; the CSV row unit.
struct RunRecord {
  std::string setting;
  std::string series;
  std::string mechanism;
  std::string score;
  double epsilon = 0.0;
  int m = 0, n = 0, l = 0, k = 1;
  int run_id = 0;
  std::uint64_t seed = 0;
  double social_cost = 0.0;    // E_A[C(S(A,W))], attributed closed form
  double total_payment = 0.0;  // sum of worker payments
  int winners = 0;
  double match_ms = 0.0, select_ms = 0.0, pay_ms = 0.0;
};

inline const char* run_csv_header() {
  return "setting,mechanism,score,epsilon,m,n,l,k,run_id,seed,social_cost,total_payment,"
         "winners,match_ms,select_ms,pay_ms";
}

std::string run_csv_row(const RunRecord& r);

// Runs one instance end to end (constrained matching so payments are
// always defined) and fills a record. `shared` optionally reuses an
// already-sampled matching.
RunRecord simulate_run(const Instance& inst, Mechanism mech, ScoreKind kind, double epsilon,
                       int k, std::uint64_t seed, ExpectationMode threshold_mode,
                       std::int64_t threshold_samples, bool record_timings,
                       const MatchingSet* shared = nullptr);

struct ExperimentOutput {
  std::string out_dir;
  std::vector<std::string> run_csvs;
  std::vector<std::string> agg_csvs;
  std::string manifest_path;
  std::string plot_script_path;
};

// Executes the configured sweep for every mechanism and score kind,
// writing per-series run CSVs, per-series aggregates, a manifest (master
// seed + config hash), and a standalone plot script. Rerunning with an
// identical configuration reproduces the metric columns byte for byte;
// pass record_timings=false to zero the wall-clock columns and make whole
// files byte-identical.
ExperimentOutput run_setting(const ScenarioConfig& cfg, const std::string& out_dir);

// Same sweep once per epsilon; rows carry their epsilon.
ExperimentOutput epsilon_sweep(const ScenarioConfig& base, const std::vector<double>& epsilons,
                               const std::string& out_dir);

// In-memory variant used by tests and the trend gates: all records for one
// scenario (no files written).
std::vector<RunRecord> collect_records(const ScenarioConfig& cfg);

}  // namespace herald
