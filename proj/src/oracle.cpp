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
#include "herald/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "herald/error.hpp"
#include "herald/rng.hpp"

namespace herald {

namespace {

constexpr int kMaxExactTasks = 24;
constexpr int kMaxBruteForcePairs = 20;
constexpr std::int64_t kMaxEnumMultisets = 1000000;

// Sums the chosen pairs' bids in ascending pair order, so equal covers
// always produce bit-identical totals regardless of search order.
double canonical_cost(const std::vector<double>& bids, const std::vector<int>& cover) {
  double c = 0.0;
  for (int idx : cover) c += bids[static_cast<std::size_t>(idx)];
  return c;
}

struct Memo {
  double cost = std::numeric_limits<double>::infinity();
  int chosen = -1;  // candidate index picked at this state
};

}  // namespace

CoverSolver::CoverSolver(const Instance& inst, const MatchingSet& p) : n_(inst.n) {
  bids_.reserve(p.pairs.size());
  covering_.resize(static_cast<std::size_t>(inst.n));
  for (std::size_t idx = 0; idx < p.pairs.size(); ++idx) {
    bids_.push_back(p.pairs[idx].bid);
    for (int t : inst.subsets[static_cast<std::size_t>(p.pairs[idx].subset)])
      covering_[static_cast<std::size_t>(t)].push_back(static_cast<int>(idx));
  }
  cheapest_.assign(static_cast<std::size_t>(inst.n), -1);
  for (int t = 0; t < inst.n; ++t)
    for (int pair : covering_[static_cast<std::size_t>(t)]) {
      int& best = cheapest_[static_cast<std::size_t>(t)];
      if (best < 0 || bids_[static_cast<std::size_t>(pair)] < bids_[static_cast<std::size_t>(best)])
        best = pair;
    }
}

OracleResult CoverSolver::solve(const std::vector<int>& arrival_tasks) const {
  // Single-distinct-task queries are the expectation loops' hot path; the
  // cheapest covering pair answers them directly.
  bool single = !arrival_tasks.empty();
  for (std::size_t i = 1; single && i < arrival_tasks.size(); ++i)
    single = arrival_tasks[i] == arrival_tasks[0];
  if (single) {
    const int t = arrival_tasks[0];
    if (t < 0 || t >= n_) throw DomainError("arrival task id out of range");
    const int best = cheapest_[static_cast<std::size_t>(t)];
    if (best < 0) throw Uncoverable("an arrival task lies in no matched subset");
    return {bids_[static_cast<std::size_t>(best)], {best}};
  }

  std::vector<int> distinct(arrival_tasks);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int t : distinct)
    if (t < 0 || t >= n_) throw DomainError("arrival task id out of range");
  if (static_cast<int>(distinct.size()) > kMaxExactTasks)
    throw SizeLimit("exact cover limited to 24 distinct arrival tasks");
  if (distinct.empty()) return {};

  // Candidate pairs restricted to the arrival tasks, masks over bit
  // positions 0..d-1, ascending pair order.
  std::vector<std::pair<int, std::uint32_t>> cands;
  for (std::size_t bit = 0; bit < distinct.size(); ++bit)
    for (int pair : covering_[static_cast<std::size_t>(distinct[bit])])
      cands.emplace_back(pair, std::uint32_t{1} << bit);
  std::sort(cands.begin(), cands.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (out > 0 && cands[out - 1].first == cands[i].first)
      cands[out - 1].second |= cands[i].second;
    else
      cands[out++] = cands[i];
  }
  cands.resize(out);

  const std::uint32_t target =
      distinct.size() == 32 ? ~0u : (std::uint32_t{1} << distinct.size()) - 1u;
  std::uint32_t covered = 0;
  for (const auto& [pair, mask] : cands) covered |= mask;
  if (covered != target) throw Uncoverable("an arrival task lies in no matched subset");

  // Exact search: any cover must include some candidate containing the
  // lowest uncovered bit; memoize completion costs per uncovered state.
  std::unordered_map<std::uint32_t, Memo> memo;
  auto solve_state = [&](auto&& self, std::uint32_t uncovered) -> double {
    if (uncovered == 0) return 0.0;
    auto it = memo.find(uncovered);
    if (it != memo.end()) return it->second.cost;
    const std::uint32_t low_bit = uncovered & (~uncovered + 1u);
    Memo best;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (!(cands[ci].second & low_bit)) continue;
      const double c = bids_[static_cast<std::size_t>(cands[ci].first)] +
                       self(self, uncovered & ~cands[ci].second);
      if (c < best.cost) {
        best.cost = c;
        best.chosen = static_cast<int>(ci);
      }
    }
    memo.emplace(uncovered, best);
    return best.cost;
  };
  solve_state(solve_state, target);

  OracleResult result;
  std::uint32_t state = target;
  while (state != 0) {
    const Memo& mm = memo.at(state);
    result.cover.push_back(cands[static_cast<std::size_t>(mm.chosen)].first);
    state &= ~cands[static_cast<std::size_t>(mm.chosen)].second;
  }
  std::sort(result.cover.begin(), result.cover.end());
  result.cost = canonical_cost(bids_, result.cover);
  return result;
}

OracleResult min_cover_cost(const Instance& inst, const MatchingSet& p,
                            const std::vector<int>& arrival_tasks) {
  return CoverSolver(inst, p).solve(arrival_tasks);
}

double brute_force_min_cover(const Instance& inst, const MatchingSet& p,
                             const std::vector<int>& arrival_tasks) {
  const int l = p.size();
  if (l > kMaxBruteForcePairs) throw SizeLimit("brute-force cover limited to 20 pairs");

  std::vector<int> distinct(arrival_tasks);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int t : distinct)
    if (t < 0 || t >= inst.n) throw DomainError("arrival task id out of range");
  if (static_cast<int>(distinct.size()) > kMaxExactTasks)
    throw SizeLimit("exact cover limited to 24 distinct arrival tasks");
  if (distinct.empty()) return 0.0;

  std::vector<std::uint32_t> pair_masks(p.pairs.size(), 0u);
  std::uint32_t covered_all = 0;
  for (std::size_t idx = 0; idx < p.pairs.size(); ++idx) {
    for (std::size_t bit = 0; bit < distinct.size(); ++bit) {
      const auto& sub = inst.subsets[static_cast<std::size_t>(p.pairs[idx].subset)];
      if (std::find(sub.begin(), sub.end(), distinct[bit]) != sub.end())
        pair_masks[idx] |= (std::uint32_t{1} << bit);
    }
    covered_all |= pair_masks[idx];
  }
  const std::uint32_t target =
      distinct.size() == 32 ? ~0u : (std::uint32_t{1} << distinct.size()) - 1u;
  if (covered_all != target) throw Uncoverable("an arrival task lies in no matched subset");

  std::vector<double> bids;
  for (const auto& pair : p.pairs) bids.push_back(pair.bid);

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_selection = 0;
  for (std::uint32_t sel = 1; sel < (1u << l); ++sel) {
    std::uint32_t covered = 0;
    double cost = 0.0;
    for (int idx = 0; idx < l; ++idx) {
      if (sel & (1u << idx)) {
        covered |= pair_masks[static_cast<std::size_t>(idx)];
        cost += bids[static_cast<std::size_t>(idx)];
      }
    }
    if (covered == target && cost < best) {
      best = cost;
      best_selection = sel;
    }
  }

  std::vector<int> cover;
  for (int idx = 0; idx < l; ++idx)
    if (best_selection & (1u << idx)) cover.push_back(idx);
  return canonical_cost(bids, cover);
}

namespace {

// Enumerates non-decreasing task sequences (unordered multisets) of size k
// and accumulates probability-weighted minimum cover costs.
struct MultisetEnum {
  const CoverSolver& solver;
  int n;
  int k;
  std::vector<double> factorial;
  std::vector<int> tasks;
  double total = 0.0;
  std::int64_t count = 0;

  MultisetEnum(const CoverSolver& s, int nn, int kk) : solver(s), n(nn), k(kk) {
    factorial.resize(static_cast<std::size_t>(k) + 1, 1.0);
    for (int x = 1; x <= k; ++x)
      factorial[static_cast<std::size_t>(x)] = factorial[static_cast<std::size_t>(x - 1)] * x;
  }

  double multiset_probability() const {
    // k! / (prod multiplicity!) / n^k
    double denom = 1.0;
    int run = 1;
    for (std::size_t i = 1; i < tasks.size(); ++i) {
      if (tasks[i] == tasks[i - 1]) {
        ++run;
      } else {
        denom *= factorial[static_cast<std::size_t>(run)];
        run = 1;
      }
    }
    denom *= factorial[static_cast<std::size_t>(run)];
    return factorial[static_cast<std::size_t>(k)] / denom / std::pow(static_cast<double>(n), k);
  }

  void recurse(int next_min) {
    if (static_cast<int>(tasks.size()) == k) {
      total += multiset_probability() * solver.solve(tasks).cost;
      ++count;
      return;
    }
    for (int t = next_min; t < n; ++t) {
      tasks.push_back(t);
      recurse(t);
      tasks.pop_back();
    }
  }
};

double binomial_count(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n + k - i) / i;  // C(n+k-1, k) built up
  return c;
}

}  // namespace

ExpectedCost expected_opt_cost(const Instance& inst, const MatchingSet& p,
                               const ArrivalModel& arrivals, ExpectationMode mode,
                               std::int64_t samples, std::uint64_t seed) {
  if (arrivals.k < 1) throw DomainError("arrival count k must be >= 1");
  const CoverSolver solver(inst, p);

  if (mode == ExpectationMode::kExactEnum) {
    if (binomial_count(inst.n, arrivals.k) > static_cast<double>(kMaxEnumMultisets))
      throw EnumTooLarge("multiset enumeration exceeds the 1e6 cap; use Monte Carlo");
    MultisetEnum e(solver, inst.n, arrivals.k);
    e.recurse(0);
    return {e.total, e.count, ExpectationMode::kExactEnum, 0.0};
  }

  if (samples < 1) throw DomainError("Monte Carlo needs at least one sample");
  const Rng root(seed);
  double sum = 0.0;
  double sumsq = 0.0;
  std::vector<int> draw(static_cast<std::size_t>(arrivals.k));
  for (std::int64_t s = 0; s < samples; ++s) {
    Rng rng = root.stream(static_cast<std::uint64_t>(s));
    for (auto& t : draw) t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(inst.n)));
    const double c = solver.solve(draw).cost;
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  const double se = samples > 1 ? std::sqrt(var / static_cast<double>(samples - 1)) : 0.0;
  return {mean, samples, ExpectationMode::kMonteCarlo, se};
}

}  // namespace herald
