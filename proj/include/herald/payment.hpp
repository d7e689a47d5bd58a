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

#include <vector>

#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/selection.hpp"

namespace herald {

// The greedy re-cover of one winner's subset by other workers' pairs.
struct ReplacedSet {
  std::vector<int> pair_indices;  // indices into P.pairs, selection order
  double total_bid = 0.0;         // p_R, the payment floor
};

struct PaymentContribution {
  int subset = 0;
  int worker = 0;
  double bid = 0.0;
  ReplacedSet replaced;
  double amount = 0.0;  // max(bid, replaced.total_bid)
};

struct PaymentProfile {
  std::vector<double> payments;  // per worker id; 0 for losers
  std::vector<PaymentContribution> contributions;

  double total() const {
    double t = 0.0;
    for (double p : payments) t += p;
    return t;
  }
};

struct UtilityProfile {
  std::vector<double> utilities;  // per worker id; 0 for losers
};

// Builds the replaced set for one winning pair: starting from a copy of
// the winner's subset, repeatedly absorb the candidate pair (any pair of a
// different worker intersecting the remaining copy set) with minimum
// cost-effectiveness against the current copy set, until the copy set is
// empty. CF is recomputed against the shrinking copy set each iteration;
// ties break by lower worker id, then lower subset index. Throws
// Irreplaceable when the copy set cannot be emptied.
ReplacedSet replaced_set(const Instance& inst, const MatchingSet& p, int winner_subset,
                         int winner_worker);

// Pays each winning pair max(bid, p_R), accumulated per worker; losers
// stay at zero.
PaymentProfile determine_payments(const Instance& inst, const MatchingSet& p,
                                  const WinningSet& s);

// Per winning pair, utility contribution = payment contribution - c_i;
// losers 0.
UtilityProfile utilities(const PaymentProfile& pay, const Instance& inst, const WinningSet& s);

}  // namespace herald
