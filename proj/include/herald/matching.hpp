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
#include "herald/scorefn.hpp"

namespace herald {

// One matched (subset, worker) pair with the worker's bid snapshotted at
// matching time.
struct MatchingPair {
  int subset = 0;
  int worker = 0;
  double bid = 0.0;
};

// One pair per subset index 0..l-1, in subset order. A worker may hold
// several pairs.
struct MatchingSet {
  std::vector<MatchingPair> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

enum class MatchMode {
  // Independent per-subset draws; the exact product form the privacy
  // analysis relies on.
  kDpPure,
  // Rejection-resamples whole matchings until every task is matched by at
  // least two distinct workers. Conditions the output distribution, so the
  // exact privacy bound no longer applies; used when downstream payment
  // determination must be well defined.
  kConstrained,
};

// Samples one worker per subset from the matching distribution by inverse
// CDF. Each subset uses a private stream derived from (seed, subset), so
// the draw for subset j does not depend on iteration order. Throws
// ConstraintExhausted when constrained mode fails within its resample cap.
MatchingSet match(const Instance& inst, const BidProfile& bids,
                  const MatchingDistribution& dist, std::uint64_t seed,
                  MatchMode mode = MatchMode::kDpPure);

// Builds the matching pinned by inst.fixed_matching (bids snapshotted from
// the profile). Throws DomainError when the instance pins none.
MatchingSet matching_from_fixed(const Instance& inst, const BidProfile& bids);

// Replaces every pair's bid snapshot with the profile's current value.
MatchingSet with_bids(const MatchingSet& p, const BidProfile& bids);

// Exact probability that independent per-subset sampling from dist yields
// exactly this matching: the product of the matched workers'
// probabilities, accumulated in log space.
double outcome_probability(const MatchingSet& outcome, const MatchingDistribution& dist);
double outcome_log_probability(const MatchingSet& outcome, const MatchingDistribution& dist);

// True when every task is matched by at least two distinct workers.
bool has_two_distinct_workers_per_task(const Instance& inst, const MatchingSet& p);

}  // namespace herald
