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
#include "herald/matching.hpp"

#include <cmath>

#include "herald/error.hpp"
#include "herald/rng.hpp"

namespace herald {

namespace {

constexpr int kConstrainedAttempts = 10000;

int sample_index(const std::vector<double>& probs, double u) {
  double acc = 0.0;
  const int m = static_cast<int>(probs.size());
  for (int i = 0; i < m; ++i) {
    acc += probs[static_cast<std::size_t>(i)];
    if (u < acc) return i;
  }
  return m - 1;  // guard against accumulated rounding at u ~ 1
}

MatchingSet draw_once(const Instance& inst, const BidProfile& bids,
                      const MatchingDistribution& dist, const Rng& root,
                      std::uint64_t attempt) {
  MatchingSet p;
  const int l = inst.num_subsets();
  p.pairs.resize(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) {
    Rng rng = root.stream(static_cast<std::uint64_t>(j), attempt);
    const int w = sample_index(dist.probs, rng.next_double());
    p.pairs[static_cast<std::size_t>(j)] = {j, w, bids.bids[static_cast<std::size_t>(w)]};
  }
  return p;
}

}  // namespace

bool has_two_distinct_workers_per_task(const Instance& inst, const MatchingSet& p) {
  std::vector<int> first(static_cast<std::size_t>(inst.n), -1);
  std::vector<char> second(static_cast<std::size_t>(inst.n), 0);
  for (const auto& pair : p.pairs) {
    for (int t : inst.subsets[static_cast<std::size_t>(pair.subset)]) {
      int& f = first[static_cast<std::size_t>(t)];
      if (f < 0)
        f = pair.worker;
      else if (f != pair.worker)
        second[static_cast<std::size_t>(t)] = 1;
    }
  }
  for (char s : second)
    if (!s) return false;
  return true;
}

MatchingSet match(const Instance& inst, const BidProfile& bids,
                  const MatchingDistribution& dist, std::uint64_t seed, MatchMode mode) {
  if (dist.num_workers() != inst.num_workers())
    throw DomainError("matching distribution does not cover the worker roster");
  if (static_cast<int>(bids.bids.size()) != inst.num_workers())
    throw DomainError("bid profile does not cover the worker roster");

  const Rng root(seed);
  if (mode == MatchMode::kDpPure) return draw_once(inst, bids, dist, root, 0);

  for (int attempt = 0; attempt < kConstrainedAttempts; ++attempt) {
    MatchingSet p = draw_once(inst, bids, dist, root, static_cast<std::uint64_t>(attempt));
    if (has_two_distinct_workers_per_task(inst, p)) return p;
  }
  throw ConstraintExhausted("constrained matching failed: could not reach two distinct workers per task");
}

MatchingSet matching_from_fixed(const Instance& inst, const BidProfile& bids) {
  if (inst.fixed_matching.empty()) throw DomainError("instance pins no fixed matching");
  MatchingSet p;
  p.pairs.resize(static_cast<std::size_t>(inst.num_subsets()));
  std::vector<char> seen(static_cast<std::size_t>(inst.num_subsets()), 0);
  for (const auto& fm : inst.fixed_matching) {
    if (fm.subset < 0 || fm.subset >= inst.num_subsets() || fm.worker < 0 ||
        fm.worker >= inst.num_workers())
      throw DomainError("fixed matching references unknown subset or worker");
    p.pairs[static_cast<std::size_t>(fm.subset)] = {fm.subset, fm.worker,
                                                    bids.bids[static_cast<std::size_t>(fm.worker)]};
    seen[static_cast<std::size_t>(fm.subset)] = 1;
  }
  for (char s : seen)
    if (!s) throw DomainError("fixed matching leaves a subset unassigned");
  return p;
}

MatchingSet with_bids(const MatchingSet& p, const BidProfile& bids) {
  MatchingSet out = p;
  for (auto& pair : out.pairs) pair.bid = bids.bids[static_cast<std::size_t>(pair.worker)];
  return out;
}

double outcome_log_probability(const MatchingSet& outcome, const MatchingDistribution& dist) {
  double log_p = 0.0;
  for (const auto& pair : outcome.pairs)
    log_p += std::log(dist.probs[static_cast<std::size_t>(pair.worker)]);
  return log_p;
}

double outcome_probability(const MatchingSet& outcome, const MatchingDistribution& dist) {
  return std::exp(outcome_log_probability(outcome, dist));
}

}  // namespace herald
