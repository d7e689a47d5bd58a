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
#include <vector>

#include "herald/instance.hpp"
#include "herald/matching.hpp"

namespace herald {

// k tasks arrive simultaneously, each drawn iid uniformly from the n tasks
// (multiset arrivals: repeats are possible).
struct ArrivalModel {
  int k = 1;
};

struct OracleResult {
  double cost = 0.0;
  std::vector<int> cover;  // indices into P.pairs, ascending
};

// Exact minimum-total-bid sub-collection of matched pairs covering every
// distinct task of A. Branch-and-bound over bitmasks of the distinct
// arrival tasks with memoization; exact for up to 24 distinct tasks
// (SizeLimit beyond). Throws Uncoverable when some task of A lies in no
// matched subset.
OracleResult min_cover_cost(const Instance& inst, const MatchingSet& p,
                            const std::vector<int>& arrival_tasks);

// Reusable exact solver bound to one matching: a task-to-pairs index is
// built once, so repeated small-arrival queries (the expectation loops ask
// 10^4 of them) cost only the covering pairs they touch.
class CoverSolver {
 public:
  CoverSolver(const Instance& inst, const MatchingSet& p);

  OracleResult solve(const std::vector<int>& arrival_tasks) const;

 private:
  int n_ = 0;
  std::vector<double> bids_;                // per pair
  std::vector<std::vector<int>> covering_;  // task id -> ascending pair ids
  std::vector<int> cheapest_;               // task id -> lowest-bid covering pair, -1 if none
};

// Independent check: exhaustive enumeration of all 2^|P| sub-collections.
// Throws SizeLimit when |P| > 20.
double brute_force_min_cover(const Instance& inst, const MatchingSet& p,
                             const std::vector<int>& arrival_tasks);

enum class ExpectationMode { kExactEnum, kMonteCarlo };

struct ExpectedCost {
  double value = 0.0;
  std::int64_t samples = 0;  // multisets enumerated, or Monte Carlo draws
  ExpectationMode mode = ExpectationMode::kExactEnum;
  double std_error = 0.0;  // 0 for exact enumeration
};

// E[C_OPT(A, W)] over random arrival multisets of size k.
//
// kExactEnum enumerates all unordered multisets with their multinomial
// probabilities (EnumTooLarge when C(n+k-1, k) exceeds 1e6). kMonteCarlo
// averages `samples` seeded draws and reports the standard error.
ExpectedCost expected_opt_cost(const Instance& inst, const MatchingSet& p,
                               const ArrivalModel& arrivals, ExpectationMode mode,
                               std::int64_t samples = 10000, std::uint64_t seed = 0);

}  // namespace herald
