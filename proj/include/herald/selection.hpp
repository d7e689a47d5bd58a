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

#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/oracle.hpp"
#include "herald/taskmask.hpp"

namespace herald {

enum class SelectionType { kTypeI, kTypeII };

// A selected pair together with the tasks it newly covered at selection
// time and the rule that picked it.
struct WinningPair {
  int subset = 0;
  int worker = 0;
  double bid = 0.0;
  TaskMask incremental_coverage;
  SelectionType selection_type = SelectionType::kTypeI;
  int round = 0;
};

struct WinningSet {
  std::vector<WinningPair> winners;  // selection order
  double threshold = 0.0;

  int size() const { return static_cast<int>(winners.size()); }
  bool contains_pair(int subset, int worker) const {
    for (const auto& w : winners)
      if (w.subset == subset && w.worker == worker) return true;
    return false;
  }
  double total_bid() const {
    double t = 0.0;
    for (const auto& w : winners) t += w.bid;
    return t;
  }
};

// Selection threshold T = 64 * E[C_OPT(A, W)].
double selection_threshold(const Instance& inst, const MatchingSet& p,
                           const ArrivalModel& arrivals, ExpectationMode mode,
                           std::int64_t samples = 10000, std::uint64_t seed = 0);

// Cost-effectiveness b_i / |Γ_j ∩ uncovered|; +infinity when the subset
// carries no uncovered task.
double cost_effectiveness(const Instance& inst, const MatchingPair& pair,
                          const TaskMask& uncovered);

// Iterative winner selection. Each round computes every remaining pair's
// cost-effectiveness against the still-uncovered tasks; if some finite CF
// is at most T / |uncovered| the minimum-CF pair wins (type I), otherwise
// the lowest-bid pair covering a new task wins (type II). Ties break by
// lower worker id, then lower subset index. The winner leaves the pool and
// its tasks leave the uncovered set; the loop ends at full coverage.
// Throws Uncoverable when uncovered tasks remain but no pair reaches them.
WinningSet select_winners(const Instance& inst, const MatchingSet& p, double threshold);

}  // namespace herald
