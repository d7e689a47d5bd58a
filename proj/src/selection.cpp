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
#include "herald/selection.hpp"

#include <limits>
#include <vector>

#include "herald/error.hpp"

namespace herald {

double selection_threshold(const Instance& inst, const MatchingSet& p,
                           const ArrivalModel& arrivals, ExpectationMode mode,
                           std::int64_t samples, std::uint64_t seed) {
  return 64.0 * expected_opt_cost(inst, p, arrivals, mode, samples, seed).value;
}

double cost_effectiveness(const Instance& inst, const MatchingPair& pair,
                          const TaskMask& uncovered) {
  const int gain = inst.subset_mask(pair.subset).intersect_count(uncovered);
  if (gain == 0) return std::numeric_limits<double>::infinity();
  return pair.bid / static_cast<double>(gain);
}

namespace {

// Prefers lower worker id, then lower subset index.
bool tie_before(const MatchingPair& a, const MatchingPair& b) {
  if (a.worker != b.worker) return a.worker < b.worker;
  return a.subset < b.subset;
}

}  // namespace

WinningSet select_winners(const Instance& inst, const MatchingSet& p, double threshold) {
  WinningSet s;
  s.threshold = threshold;

  std::vector<MatchingPair> pool = p.pairs;
  std::vector<TaskMask> pool_masks;
  pool_masks.reserve(pool.size());
  for (const auto& pair : pool) pool_masks.push_back(inst.subset_mask(pair.subset));

  TaskMask uncovered = TaskMask::full(inst.n);
  int round = 0;
  while (!uncovered.none()) {
    int best = -1;
    double best_cf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const int gain = pool_masks[i].intersect_count(uncovered);
      if (gain == 0) continue;
      const double cf = pool[i].bid / static_cast<double>(gain);
      if (cf < best_cf || (cf == best_cf && best >= 0 &&
                           tie_before(pool[i], pool[static_cast<std::size_t>(best)]))) {
        best_cf = cf;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) throw Uncoverable("uncovered tasks remain but no matched subset reaches them");

    int chosen;
    SelectionType type;
    if (best_cf <= threshold / static_cast<double>(uncovered.count())) {
      chosen = best;  // type I: minimum cost-effectiveness
      type = SelectionType::kTypeI;
    } else {
      // Type II: lowest bid among pairs still covering a new task.
      type = SelectionType::kTypeII;
      chosen = -1;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!pool_masks[i].intersects(uncovered)) continue;
        if (chosen < 0 || pool[i].bid < pool[static_cast<std::size_t>(chosen)].bid ||
            (pool[i].bid == pool[static_cast<std::size_t>(chosen)].bid &&
             tie_before(pool[i], pool[static_cast<std::size_t>(chosen)])))
          chosen = static_cast<int>(i);
      }
    }

    WinningPair w;
    w.subset = pool[static_cast<std::size_t>(chosen)].subset;
    w.worker = pool[static_cast<std::size_t>(chosen)].worker;
    w.bid = pool[static_cast<std::size_t>(chosen)].bid;
    w.incremental_coverage = pool_masks[static_cast<std::size_t>(chosen)].intersect(uncovered);
    w.selection_type = type;
    w.round = round++;
    uncovered.subtract(pool_masks[static_cast<std::size_t>(chosen)]);
    s.winners.push_back(w);

    pool.erase(pool.begin() + chosen);
    pool_masks.erase(pool_masks.begin() + chosen);
  }
  return s;
}

}  // namespace herald
