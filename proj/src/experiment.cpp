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
#include "herald/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "herald/audit.hpp"
#include "herald/baselines.hpp"
#include "herald/error.hpp"
#include "herald/parallel.hpp"
#include "herald/payment.hpp"
#include "herald/rng.hpp"
#include "herald/selection.hpp"

namespace herald {

std::string to_string(Setting s) {
  switch (s) {
    case Setting::kI: return "I";
    case Setting::kII: return "II";
    case Setting::kIII: return "III";
    case Setting::kIV: return "IV";
  }
  return "?";
}

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::kHerald: return "herald";
    case Mechanism::kCone: return "cone";
    case Mechanism::kCosy: return "cosy";
  }
  return "?";
}

Setting setting_from_string(const std::string& name) {
  if (name == "I" || name == "1") return Setting::kI;
  if (name == "II" || name == "2") return Setting::kII;
  if (name == "III" || name == "3") return Setting::kIII;
  if (name == "IV" || name == "4") return Setting::kIV;
  throw DomainError("unknown setting: " + name);
}

Mechanism mechanism_from_string(const std::string& name) {
  if (name == "herald") return Mechanism::kHerald;
  if (name == "cone") return Mechanism::kCone;
  if (name == "cosy") return Mechanism::kCosy;
  throw DomainError("unknown mechanism: " + name);
}

namespace {

std::string series_tag(const char* prefix, double lo, double hi) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%g_%g", prefix, lo, hi);
  return buf;
}

void append_m_sweep(ScenarioConfig& cfg, const std::string& series, int m_lo, int m_hi,
                    int m_step, int n, Interval cost, IntInterval size, double b_max) {
  int index = 0;
  for (int m = m_lo; m <= m_hi; m += m_step) {
    SweepPoint pt;
    pt.series = series;
    pt.index = index++;
    pt.icfg = InstanceConfig{n, m, m, cost, size, b_max};
    cfg.points.push_back(pt);
  }
}

IntInterval desk_size_interval(int n) { return {(n + 2) / 3, n / 2}; }

}  // namespace

ScenarioConfig ScenarioConfig::preset(Setting setting, Scale scale, int runs, std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.setting = setting;
  cfg.scale = scale;
  cfg.runs = runs;
  cfg.master_seed = seed;
  cfg.threshold_mode =
      scale == Scale::kDesk ? ExpectationMode::kExactEnum : ExpectationMode::kMonteCarlo;

  const bool desk = scale == Scale::kDesk;
  switch (setting) {
    case Setting::kI: {
      if (desk)
        append_m_sweep(cfg, "", 6, 15, 1, 12, {1, 5}, {4, 6}, 5.0);
      else
        append_m_sweep(cfg, "", 60, 150, 5, 120, {1, 5}, {15, 20}, 5.0);
      break;
    }
    case Setting::kII: {
      // Task-count sweep at fixed worker count.
      int index = 0;
      const int n_lo = desk ? 12 : 80, n_hi = desk ? 16 : 160, n_step = desk ? 1 : 5;
      const int m = desk ? 8 : 80;
      for (int n = n_lo; n <= n_hi; n += n_step) {
        SweepPoint pt;
        pt.index = index++;
        pt.icfg = InstanceConfig{n, m, m, {1, 5}, desk ? desk_size_interval(n) : IntInterval{15, 20}, 5.0};
        cfg.points.push_back(pt);
      }
      break;
    }
    case Setting::kIII: {
      const std::vector<Interval> costs = {{1, 5}, {5, 10}, {10, 15}};
      for (const auto& c : costs) {
        const std::string series = series_tag("cost", c.lo, c.hi);
        if (desk)
          append_m_sweep(cfg, series, 6, 15, 1, 12, c, {4, 6}, 15.0);
        else
          append_m_sweep(cfg, series, 60, 150, 5, 120, c, {15, 20}, 15.0);
      }
      break;
    }
    case Setting::kIV: {
      const std::vector<IntInterval> sizes_paper = {{10, 15}, {15, 20}, {20, 25}};
      const std::vector<IntInterval> sizes_desk = {{4, 6}, {6, 8}, {8, 10}};
      for (const auto& sz : (desk ? sizes_desk : sizes_paper)) {
        const std::string series = series_tag("size", sz.lo, sz.hi);
        if (desk)
          append_m_sweep(cfg, series, 6, 15, 1, 12, {1, 5}, sz, 5.0);
        else
          append_m_sweep(cfg, series, 60, 150, 5, 120, {1, 5}, sz, 5.0);
      }
      break;
    }
  }
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct AuctionOutcome {
  WinningSet s;
  PaymentProfile pay;
  double select_ms = 0.0;
  double pay_ms = 0.0;
};

AuctionOutcome run_auction(const Instance& inst, const MatchingSet& p, Mechanism mech, int k,
                           ExpectationMode thr_mode, std::int64_t thr_samples,
                           std::uint64_t thr_seed, bool timings) {
  AuctionOutcome out;
  auto t0 = Clock::now();
  switch (mech) {
    case Mechanism::kHerald: {
      const double threshold =
          selection_threshold(inst, p, ArrivalModel{k}, thr_mode, thr_samples, thr_seed);
      out.s = select_winners(inst, p, threshold);
      break;
    }
    case Mechanism::kCone:
      out.s = cone_select(inst, p);
      break;
    case Mechanism::kCosy:
      out.s = cosy_select(inst, p);
      break;
  }
  if (timings) out.select_ms = ms_since(t0);

  t0 = Clock::now();
  out.pay = determine_payments(inst, p, out.s);
  if (timings) out.pay_ms = ms_since(t0);
  return out;
}

RunRecord make_record(const Instance& inst, const SweepPoint& pt, const ScenarioConfig& cfg,
                      Mechanism mech, ScoreKind kind, int run_id, std::uint64_t seed,
                      const AuctionOutcome& out, double match_ms) {
  RunRecord r;
  r.setting = to_string(cfg.setting);
  r.series = pt.series;
  r.mechanism = to_string(mech);
  r.score = to_string(kind);
  r.epsilon = cfg.epsilon;
  r.m = pt.icfg.m;
  r.n = pt.icfg.n;
  r.l = pt.icfg.effective_l();
  r.k = cfg.k;
  r.run_id = run_id;
  r.seed = seed;
  r.social_cost = expected_attributed_cost(inst, out.s, cfg.k);
  r.total_payment = out.pay.total();
  r.winners = out.s.size();
  r.match_ms = match_ms;
  r.select_ms = out.select_ms;
  r.pay_ms = out.pay_ms;
  return r;
}

}  // namespace

RunRecord simulate_run(const Instance& inst, Mechanism mech, ScoreKind kind, double epsilon,
                       int k, std::uint64_t seed, ExpectationMode threshold_mode,
                       std::int64_t threshold_samples, bool record_timings,
                       const MatchingSet* shared) {
  const BidProfile bids = BidProfile::truthful(inst);
  Rng job(seed);
  const std::uint64_t match_seed = job.next_u64();
  const std::uint64_t thr_seed = job.next_u64();

  MatchingSet p;
  double match_ms = 0.0;
  if (shared != nullptr) {
    p = *shared;
  } else if (!inst.fixed_matching.empty()) {
    p = matching_from_fixed(inst, bids);
  } else {
    const auto t0 = Clock::now();
    const MatchingDistribution dist = matching_probabilities(bids, kind, epsilon, inst.b_max);
    p = match(inst, bids, dist, match_seed, MatchMode::kConstrained);
    if (record_timings) match_ms = ms_since(t0);
  }

  const AuctionOutcome out =
      run_auction(inst, p, mech, k, threshold_mode, threshold_samples, thr_seed, record_timings);

  RunRecord r;
  r.setting = "-";
  r.mechanism = to_string(mech);
  r.score = to_string(kind);
  r.epsilon = epsilon;
  r.m = inst.num_workers();
  r.n = inst.n;
  r.l = inst.num_subsets();
  r.k = k;
  r.run_id = 0;
  r.seed = seed;
  r.social_cost = expected_attributed_cost(inst, out.s, k);
  r.total_payment = out.pay.total();
  r.winners = out.s.size();
  r.match_ms = match_ms;
  r.select_ms = out.select_ms;
  r.pay_ms = out.pay_ms;
  return r;
}

std::string run_csv_row(const RunRecord& r) {
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.6g,%d,%d,%d,%d,%d,%llu,%.6f,%.6f,%d,%.4f,%.4f,%.4f",
                r.setting.c_str(), r.mechanism.c_str(), r.score.c_str(), r.epsilon, r.m, r.n, r.l,
                r.k, r.run_id, static_cast<unsigned long long>(r.seed), r.social_cost,
                r.total_payment, r.winners, r.match_ms, r.select_ms, r.pay_ms);
  return buf;
}

std::vector<RunRecord> collect_records(const ScenarioConfig& cfg) {
  const Rng root(cfg.master_seed);
  const std::size_t jobs = cfg.points.size() * static_cast<std::size_t>(cfg.runs);
  std::vector<std::vector<RunRecord>> slots(jobs);

  parallel_for(jobs, [&](std::size_t job_index) {
    const std::size_t point_index = job_index / static_cast<std::size_t>(cfg.runs);
    const int run_id = static_cast<int>(job_index % static_cast<std::size_t>(cfg.runs));
    const SweepPoint& pt = cfg.points[point_index];

    Rng job = root.stream(point_index, static_cast<std::uint64_t>(run_id));
    const std::uint64_t inst_seed = job.next_u64();
    const std::uint64_t match_seed = job.next_u64();
    const std::uint64_t thr_seed = job.next_u64();
    const std::uint64_t indep_seed = job.next_u64();

    const Instance inst = generate_instance(pt.icfg, inst_seed);
    const BidProfile bids = BidProfile::truthful(inst);

    auto& rows = slots[job_index];
    for (ScoreKind kind : {ScoreKind::kLinear, ScoreKind::kLogarithmic}) {
      const MatchingDistribution dist =
          matching_probabilities(bids, kind, cfg.epsilon, inst.b_max);

      const auto t0 = Clock::now();
      const MatchingSet p = match(inst, bids, dist, match_seed, MatchMode::kConstrained);
      const double match_ms = cfg.record_timings ? ms_since(t0) : 0.0;

      for (Mechanism mech : {Mechanism::kHerald, Mechanism::kCone, Mechanism::kCosy}) {
        MatchingSet own;
        const MatchingSet* use = &p;
        double row_match_ms = match_ms;
        if (cfg.protocol == MatchProtocol::kIndependent && mech != Mechanism::kHerald) {
          const auto t1 = Clock::now();
          own = match(inst, bids, dist,
                      Rng(indep_seed).stream(static_cast<std::uint64_t>(mech)).next_u64(),
                      MatchMode::kConstrained);
          row_match_ms = cfg.record_timings ? ms_since(t1) : 0.0;
          use = &own;
        }
        const AuctionOutcome out = run_auction(inst, *use, mech, cfg.k, cfg.threshold_mode,
                                               cfg.threshold_samples, thr_seed,
                                               cfg.record_timings);
        rows.push_back(
            make_record(inst, pt, cfg, mech, kind, run_id, inst_seed, out, row_match_ms));
      }
    }
  });

  std::vector<RunRecord> records;
  records.reserve(jobs * 6);
  for (auto& s : slots)
    for (auto& r : s) records.push_back(std::move(r));
  return records;
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string canonical_config(const ScenarioConfig& cfg) {
  std::ostringstream ss;
  ss << to_string(cfg.setting) << '|' << (cfg.scale == Scale::kDesk ? "desk" : "paper") << '|'
     << cfg.epsilon << '|' << cfg.k << '|' << cfg.runs << '|' << cfg.master_seed << '|'
     << (cfg.protocol == MatchProtocol::kShared ? "shared" : "independent") << '|'
     << (cfg.threshold_mode == ExpectationMode::kExactEnum ? "exact" : "mc") << '|'
     << cfg.threshold_samples << '|' << cfg.record_timings;
  for (const auto& pt : cfg.points)
    ss << '|' << pt.series << ':' << pt.icfg.n << ',' << pt.icfg.m << ',' << pt.icfg.effective_l()
       << ',' << pt.icfg.cost.lo << ',' << pt.icfg.cost.hi << ',' << pt.icfg.subset_size.lo << ','
       << pt.icfg.subset_size.hi << ',' << pt.icfg.b_max;
  return ss.str();
}

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", eps);
  std::string s(buf);
  for (auto& c : s)
    if (c == '.' || c == '+' || c == '-') c = 'p';
  return s;
}

struct AggKey {
  std::string series;
  int point;
  std::string mechanism;
  std::string score;
  double epsilon;
  bool operator<(const AggKey& o) const {
    if (series != o.series) return series < o.series;
    if (point != o.point) return point < o.point;
    if (mechanism != o.mechanism) return mechanism < o.mechanism;
    if (score != o.score) return score < o.score;
    return epsilon < o.epsilon;
  }
};

struct AggVal {
  int m = 0, n = 0, l = 0, k = 1;
  long count = 0;
  double social = 0.0, payment = 0.0, winners = 0.0;
  double match_ms = 0.0, select_ms = 0.0, pay_ms = 0.0;
};

void write_aggregates(const std::string& path, const ScenarioConfig& cfg,
                      const std::vector<RunRecord>& records) {
  // Point index recovered from (series, m, n) via the config's points.
  std::map<std::pair<std::string, std::pair<int, int>>, int> point_of;
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    point_of[{cfg.points[i].series, {cfg.points[i].icfg.m, cfg.points[i].icfg.n}}] =
        cfg.points[i].index;

  std::map<AggKey, AggVal> agg;
  for (const auto& r : records) {
    AggKey key{r.series, point_of.at({r.series, {r.m, r.n}}), r.mechanism, r.score, r.epsilon};
    AggVal& v = agg[key];
    v.m = r.m;
    v.n = r.n;
    v.l = r.l;
    v.k = r.k;
    v.count++;
    v.social += r.social_cost;
    v.payment += r.total_payment;
    v.winners += r.winners;
    v.match_ms += r.match_ms;
    v.select_ms += r.select_ms;
    v.pay_ms += r.pay_ms;
  }

  std::ofstream out(path);
  out << "series,point,m,n,l,k,mechanism,score,epsilon,runs,mean_social_cost,"
         "mean_total_payment,mean_winners,mean_match_ms,mean_select_ms,mean_pay_ms\n";
  char buf[384];
  for (const auto& [key, v] : agg) {
    const double c = static_cast<double>(v.count);
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%s,%s,%.6g,%ld,%.6f,%.6f,%.4f,%.4f,%.4f,%.4f",
                  key.series.empty() ? "-" : key.series.c_str(), key.point, v.m, v.n, v.l, v.k,
                  key.mechanism.c_str(), key.score.c_str(), key.epsilon, v.count, v.social / c,
                  v.payment / c, v.winners / c, v.match_ms / c, v.select_ms / c, v.pay_ms / c);
    out << buf << "\n";
  }
}

void write_runs_csv(const std::string& path, const std::string& series,
                    const std::vector<RunRecord>& records) {
  std::ofstream out(path);
  out << run_csv_header() << "\n";
  for (const auto& r : records)
    if (r.series == series) out << run_csv_row(r) << "\n";
}

std::vector<std::string> distinct_series(const ScenarioConfig& cfg) {
  std::vector<std::string> series;
  for (const auto& pt : cfg.points)
    if (std::find(series.begin(), series.end(), pt.series) == series.end())
      series.push_back(pt.series);
  return series;
}

const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Plots aggregate experiment CSVs found next to this script.

Needs only the Python standard library plus matplotlib."""
import csv
import glob
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

def load(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))

def main():
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required to draw the plots")

    for path in sorted(glob.glob(os.path.join(HERE, "agg_*.csv"))):
        rows = load(path)
        if not rows:
            continue
        xs = sorted({int(r["m"]) for r in rows})
        x_field = "m" if len(xs) > 1 else "n"
        for metric in ("mean_social_cost", "mean_total_payment"):
            plt.figure(figsize=(7, 4.5))
            keys = sorted({(r["mechanism"], r["score"], r["epsilon"]) for r in rows})
            for mech, score, eps in keys:
                pts = [(int(r[x_field]), float(r[metric])) for r in rows
                       if (r["mechanism"], r["score"], r["epsilon"]) == (mech, score, eps)]
                pts.sort()
                label = f"{mech}-{score}" + (f" eps={eps}" if len({k[2] for k in keys}) > 1 else "")
                plt.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=label)
            plt.xlabel(x_field)
            plt.ylabel(metric.replace("_", " "))
            plt.legend(fontsize=7)
            plt.tight_layout()
            png = path[:-4] + f".{metric}.png"
            plt.savefig(png, dpi=120)
            plt.close()
            print("wrote", png)

if __name__ == "__main__":
    main()
)PY";

}  // namespace

ExperimentOutput run_setting(const ScenarioConfig& cfg, const std::string& out_dir) {
  return epsilon_sweep(cfg, {cfg.epsilon}, out_dir);
}

ExperimentOutput epsilon_sweep(const ScenarioConfig& base, const std::vector<double>& epsilons,
                               const std::string& out_dir) {
  if (base.runs < 1) throw DomainError("experiment needs at least one run per point");
  if (base.points.empty()) throw DomainError("experiment sweep has no points");
  if (epsilons.empty()) throw DomainError("epsilon sweep needs at least one epsilon");
  for (double eps : epsilons)
    if (!(eps > 0.0)) throw DomainError("epsilon must be > 0");

  std::filesystem::create_directories(out_dir);
  ExperimentOutput output;
  output.out_dir = out_dir;

  nlohmann::json manifest;
  manifest["setting"] = to_string(base.setting);
  manifest["scale"] = base.scale == Scale::kDesk ? "desk" : "paper";
  manifest["runs"] = base.runs;
  manifest["master_seed"] = base.master_seed;
  manifest["k"] = base.k;
  manifest["epsilons"] = epsilons;
  manifest["protocol"] = base.protocol == MatchProtocol::kShared ? "shared" : "independent";
  manifest["threshold_mode"] =
      base.threshold_mode == ExpectationMode::kExactEnum ? "exact" : "mc";
  manifest["threshold_samples"] = base.threshold_samples;
  manifest["record_timings"] = base.record_timings;

  const bool multi_eps = epsilons.size() > 1;
  std::string hash_input;
  for (double eps : epsilons) {
    ScenarioConfig cfg = base;
    cfg.epsilon = eps;
    hash_input += canonical_config(cfg) + ";";
    const std::vector<RunRecord> records = collect_records(cfg);

    for (const std::string& series : distinct_series(cfg)) {
      std::string stem = to_string(cfg.setting);
      if (!series.empty()) stem += "_" + series;
      if (multi_eps) stem += "_eps" + eps_tag(eps);

      const std::string runs_path = out_dir + "/runs_" + stem + ".csv";
      std::vector<RunRecord> series_records;
      for (const auto& r : records)
        if (r.series == series) series_records.push_back(r);
      write_runs_csv(runs_path, series, series_records);
      output.run_csvs.push_back(runs_path);

      const std::string agg_path = out_dir + "/agg_" + stem + ".csv";
      ScenarioConfig series_cfg = cfg;  // aggregates need point lookup only
      write_aggregates(agg_path, series_cfg, series_records);
      output.agg_csvs.push_back(agg_path);
    }
  }

  manifest["config_hash"] = fnv1a(hash_input);
  {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& f : output.run_csvs) files.push_back(std::filesystem::path(f).filename().string());
    for (const auto& f : output.agg_csvs) files.push_back(std::filesystem::path(f).filename().string());
    manifest["outputs"] = files;
  }

  output.manifest_path = out_dir + "/manifest.json";
  std::ofstream(output.manifest_path) << manifest.dump(2) << "\n";

  output.plot_script_path = out_dir + "/plot.py";
  std::ofstream(output.plot_script_path) << kPlotScript;

  return output;
}

}  // namespace herald
