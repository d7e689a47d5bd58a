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
#include "herald/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "herald/error.hpp"
#include "herald/rng.hpp"
#include "herald/stats.hpp"

namespace herald {

namespace {

constexpr double kRatioSlack = 1e-9;

}  // namespace

// ---- Differential privacy ----------------------------------------------

DpAuditReport dp_exact_audit(const Instance& inst, ScoreKind kind, double epsilon, int grid,
                             std::uint64_t seed) {
  const int m = inst.num_workers();
  const int l = inst.num_subsets();
  if (m > 4 || l > 4) throw EnumTooLarge("exact privacy audit limited to m <= 4, l <= 4");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");

  DpAuditReport rep;
  rep.epsilon = epsilon;
  rep.kind = kind;
  rep.m = m;
  rep.l = l;
  rep.bound_proven = std::exp(epsilon * (std::exp(1.0) - 1.0) * l / 2.0);
  rep.bound_stated = std::exp(epsilon * l / 2.0);

  const double b_max = inst.b_max;
  const double mid = (1.0 + b_max) / 2.0;

  // Base profiles: the roster's costs, three constant corners, and `grid`
  // random profiles.
  std::vector<std::vector<double>> bases;
  bases.push_back(inst.costs());
  bases.push_back(std::vector<double>(static_cast<std::size_t>(m), 1.0));
  bases.push_back(std::vector<double>(static_cast<std::size_t>(m), b_max));
  bases.push_back(std::vector<double>(static_cast<std::size_t>(m), mid));
  Rng rng(seed);
  for (int g = 0; g < grid; ++g) {
    std::vector<double> prof(static_cast<std::size_t>(m));
    for (auto& b : prof) b = rng.next_real(1.0, b_max);
    bases.push_back(std::move(prof));
  }

  // All m^l outcome sequences, as per-subset worker indices.
  std::vector<std::vector<int>> outcomes;
  std::vector<int> cur(static_cast<std::size_t>(l), 0);
  for (;;) {
    outcomes.push_back(cur);
    int pos = l - 1;
    while (pos >= 0) {
      if (++cur[static_cast<std::size_t>(pos)] < m) break;
      cur[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  rep.outcomes = static_cast<std::int64_t>(outcomes.size());

  const auto clamp = [&](double b) { return std::min(b_max, std::max(1.0, b)); };

  for (const auto& base : bases) {
    ++rep.profiles;
    const MatchingDistribution dist =
        matching_probabilities(BidProfile{base}, kind, epsilon, b_max);
    std::vector<double> log_probs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) log_probs[static_cast<std::size_t>(i)] = std::log(dist.probs[static_cast<std::size_t>(i)]);

    for (int i = 0; i < m; ++i) {
      const double orig = base[static_cast<std::size_t>(i)];
      std::vector<double> candidates = {1.0, mid, b_max, clamp(orig * 0.9), clamp(orig * 1.1)};
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (double nb : candidates) {
        if (std::fabs(nb - orig) < 1e-12) continue;
        std::vector<double> neighbor = base;
        neighbor[static_cast<std::size_t>(i)] = nb;
        const MatchingDistribution ndist =
            matching_probabilities(BidProfile{neighbor}, kind, epsilon, b_max);
        ++rep.neighbor_pairs;

        std::vector<double> nlog(static_cast<std::size_t>(m));
        for (int w = 0; w < m; ++w) nlog[static_cast<std::size_t>(w)] = std::log(ndist.probs[static_cast<std::size_t>(w)]);

        for (const auto& outcome : outcomes) {
          double delta = 0.0;
          for (int w : outcome)
            delta += log_probs[static_cast<std::size_t>(w)] - nlog[static_cast<std::size_t>(w)];
          // Both directions of the neighboring relation.
          const double ratio = std::exp(std::fabs(delta));
          if (ratio > rep.worst_ratio) rep.worst_ratio = ratio;
        }
      }
    }
  }

  rep.pass = rep.worst_ratio <= rep.bound_proven * (1.0 + kRatioSlack);
  return rep;
}

// ---- Truthfulness --------------------------------------------------------

namespace {

double replay_utility(const Instance& inst, const MatchingSet& p, int worker, double bid,
                      const ArrivalModel& arrivals, ExpectationMode mode,
                      const std::optional<double>& fixed_threshold, std::int64_t mc_samples,
                      std::uint64_t seed) {
  BidProfile bids = BidProfile::truthful(inst);
  bids.bids[static_cast<std::size_t>(worker)] = bid;
  const MatchingSet replayed = with_bids(p, bids);
  const double threshold =
      fixed_threshold ? *fixed_threshold
                      : selection_threshold(inst, replayed, arrivals, mode, mc_samples, seed);
  const WinningSet s = select_winners(inst, replayed, threshold);
  const PaymentProfile pay = determine_payments(inst, replayed, s);
  const UtilityProfile util = utilities(pay, inst, s);
  return util.utilities[static_cast<std::size_t>(worker)];
}

}  // namespace

TruthAuditReport truthfulness_audit(const Instance& inst, const MatchingSet& p, int worker,
                                    int grid_size, const ArrivalModel& arrivals,
                                    ExpectationMode mode, std::optional<double> fixed_threshold,
                                    std::int64_t mc_samples, std::uint64_t seed) {
  if (worker < 0 || worker >= inst.num_workers()) throw DomainError("worker id out of range");
  if (grid_size < 2) throw DomainError("deviation grid needs at least 2 points");

  TruthAuditReport rep;
  rep.worker = worker;
  rep.grid_size = grid_size;
  const double truthful_bid = inst.costs()[static_cast<std::size_t>(worker)];
  rep.truthful_utility = replay_utility(inst, p, worker, truthful_bid, arrivals, mode,
                                        fixed_threshold, mc_samples, seed);
  rep.best_deviation_utility = rep.truthful_utility;
  rep.best_deviation_bid = truthful_bid;

  for (int g = 0; g < grid_size; ++g) {
    const double bid =
        1.0 + (inst.b_max - 1.0) * static_cast<double>(g) / static_cast<double>(grid_size - 1);
    const double u = replay_utility(inst, p, worker, bid, arrivals, mode, fixed_threshold,
                                    mc_samples, seed);
    if (u > rep.best_deviation_utility) {
      rep.best_deviation_utility = u;
      rep.best_deviation_bid = bid;
    }
  }
  rep.max_gain = rep.best_deviation_utility - rep.truthful_utility;
  return rep;
}

// ---- Individual rationality ----------------------------------------------

void check_individual_rationality(const Instance& inst, const WinningSet& s,
                                  const PaymentProfile& pay, const UtilityProfile& util,
                                  IrReport& report, const std::string& context) {
  ++report.runs;
  const auto costs = inst.costs();
  std::vector<char> winner(static_cast<std::size_t>(inst.num_workers()), 0);
  for (const auto& w : s.winners) winner[static_cast<std::size_t>(w.worker)] = 1;

  char buf[160];
  for (const auto& c : pay.contributions) {
    ++report.winning_contributions;
    if (c.amount < costs[static_cast<std::size_t>(c.worker)] - 1e-12) {
      std::snprintf(buf, sizeof(buf), "%s: winning contribution %.12g below cost %.12g (worker %d)",
                    context.c_str(), c.amount, costs[static_cast<std::size_t>(c.worker)], c.worker);
      report.violations.emplace_back(buf);
    }
  }
  for (int i = 0; i < inst.num_workers(); ++i) {
    const double u = util.utilities[static_cast<std::size_t>(i)];
    const double paid = pay.payments[static_cast<std::size_t>(i)];
    if (winner[static_cast<std::size_t>(i)]) {
      if (u < -1e-12) {
        std::snprintf(buf, sizeof(buf), "%s: winner %d has negative utility %.12g", context.c_str(), i, u);
        report.violations.emplace_back(buf);
      }
    } else {
      if (paid != 0.0 || u != 0.0) {
        std::snprintf(buf, sizeof(buf), "%s: loser %d has payment %.12g utility %.12g",
                      context.c_str(), i, paid, u);
        report.violations.emplace_back(buf);
      }
    }
  }
}

IrReport ir_audit(const Instance& inst, ScoreKind kind, double epsilon, int k,
                  std::int64_t seeds, std::uint64_t master_seed) {
  IrReport rep;
  const BidProfile bids = BidProfile::truthful(inst);
  const MatchingDistribution dist = matching_probabilities(bids, kind, epsilon, inst.b_max);
  const Rng root(master_seed);
  for (std::int64_t i = 0; i < seeds; ++i) {
    const std::uint64_t seed = root.stream(static_cast<std::uint64_t>(i)).next_u64();
    const MatchingSet p = match(inst, bids, dist, seed, MatchMode::kConstrained);
    const ArrivalModel arrivals{k};
    const ExpectationMode mode =
        inst.n <= 24 ? ExpectationMode::kExactEnum : ExpectationMode::kMonteCarlo;
    const double threshold = selection_threshold(inst, p, arrivals, mode, 10000, seed);
    const WinningSet s = select_winners(inst, p, threshold);
    const PaymentProfile pay = determine_payments(inst, p, s);
    const UtilityProfile util = utilities(pay, inst, s);
    char ctx[48];
    std::snprintf(ctx, sizeof(ctx), "seed %lld", static_cast<long long>(i));
    check_individual_rationality(inst, s, pay, util, rep, ctx);
  }
  return rep;
}

// ---- Competitive ratio -----------------------------------------------------

double expected_attributed_cost(const Instance& inst, const WinningSet& s, int k) {
  if (k < 1) throw DomainError("arrival count k must be >= 1");
  const auto costs = inst.costs();
  const double n = static_cast<double>(inst.n);
  double total = 0.0;
  for (const auto& w : s.winners) {
    const double miss = (n - static_cast<double>(w.incremental_coverage.count())) / n;
    total += costs[static_cast<std::size_t>(w.worker)] * (1.0 - std::pow(miss, k));
  }
  return total;
}

double ratio_ceiling(int n, int l) {
  return 64.0 * std::log(static_cast<double>(n)) + 8.0 * std::log(2.0 * n) +
         16.0 * std::log(static_cast<double>(l));
}

namespace {

RatioReport finish_ratio_report(RatioReport rep, const std::vector<double>& mech,
                                const std::vector<double>& opt, const std::vector<double>& ratios) {
  rep.mean_mechanism_cost = mean(mech);
  rep.mean_opt_cost = mean(opt);
  rep.mean_ratio = mean(ratios);
  rep.ceiling = ratio_ceiling(rep.n, rep.l);
  rep.pass = rep.mean_ratio <= rep.ceiling;
  return rep;
}

}  // namespace

RatioReport ratio_audit(const InstanceConfig& cfg, const ArrivalModel& arrivals, ScoreKind kind,
                        double epsilon, std::int64_t seeds, std::uint64_t master_seed,
                        ExpectationMode mode, std::int64_t mc_samples) {
  RatioReport rep;
  rep.n = cfg.n;
  rep.m = cfg.m;
  rep.l = cfg.effective_l();
  rep.k = arrivals.k;
  rep.seeds = seeds;

  std::vector<double> mech, opt, ratios;
  const Rng root(master_seed);
  for (std::int64_t i = 0; i < seeds; ++i) {
    const std::uint64_t seed = root.stream(static_cast<std::uint64_t>(i)).next_u64();
    const Instance inst = generate_instance(cfg, seed);
    const BidProfile bids = BidProfile::truthful(inst);
    const MatchingDistribution dist = matching_probabilities(bids, kind, epsilon, inst.b_max);
    const MatchingSet p = match(inst, bids, dist, seed, MatchMode::kDpPure);
    const double threshold = selection_threshold(inst, p, arrivals, mode, mc_samples, seed);
    const WinningSet s = select_winners(inst, p, threshold);

    const double c_mech = expected_attributed_cost(inst, s, arrivals.k);
    const double c_opt = expected_opt_cost(inst, p, arrivals, mode, mc_samples, seed).value;
    mech.push_back(c_mech);
    opt.push_back(c_opt);
    ratios.push_back(c_mech / c_opt);
  }
  return finish_ratio_report(rep, mech, opt, ratios);
}

RatioReport ratio_audit_instance(const Instance& inst, const ArrivalModel& arrivals,
                                 ExpectationMode mode, std::int64_t mc_samples) {
  RatioReport rep;
  rep.n = inst.n;
  rep.m = inst.num_workers();
  rep.l = inst.num_subsets();
  rep.k = arrivals.k;
  rep.seeds = 1;

  const BidProfile bids = BidProfile::truthful(inst);
  const MatchingSet p = matching_from_fixed(inst, bids);
  const double threshold = selection_threshold(inst, p, arrivals, mode, mc_samples, 0);
  const WinningSet s = select_winners(inst, p, threshold);
  const double c_mech = expected_attributed_cost(inst, s, arrivals.k);
  const double c_opt = expected_opt_cost(inst, p, arrivals, mode, mc_samples, 0).value;
  return finish_ratio_report(rep, {c_mech}, {c_opt}, {c_mech / c_opt});
}

}  // namespace herald
