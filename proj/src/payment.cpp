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
#include "herald/payment.hpp"

#include <algorithm>
#include <limits>

#include "herald/error.hpp"

namespace herald {

ReplacedSet replaced_set(const Instance& inst, const MatchingSet& p, int winner_subset,
                         int winner_worker) {
  TaskMask copy_set = inst.subset_mask(winner_subset);

  std::vector<TaskMask> masks;
  masks.reserve(p.pairs.size());
  for (const auto& pair : p.pairs) masks.push_back(inst.subset_mask(pair.subset));
  std::vector<char> used(p.pairs.size(), 0);

  ReplacedSet r;
  while (!copy_set.none()) {
    int best = -1;
    double best_cf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
      if (used[i] || p.pairs[i].worker == winner_worker) continue;
      const int gain = masks[i].intersect_count(copy_set);
      if (gain == 0) continue;
      const double cf = p.pairs[i].bid / static_cast<double>(gain);
      const bool better =
          cf < best_cf ||
          (cf == best_cf && best >= 0 &&
           (p.pairs[i].worker < p.pairs[static_cast<std::size_t>(best)].worker ||
            (p.pairs[i].worker == p.pairs[static_cast<std::size_t>(best)].worker &&
             p.pairs[i].subset < p.pairs[static_cast<std::size_t>(best)].subset)));
      if (better) {
        best_cf = cf;
        best = static_cast<int>(i);
      }
    }
    if (best < 0)
      throw Irreplaceable("winner's subset cannot be re-covered by other workers' pairs");
    used[static_cast<std::size_t>(best)] = 1;
    r.pair_indices.push_back(best);
    copy_set.subtract(masks[static_cast<std::size_t>(best)]);
  }

  for (int idx : r.pair_indices) r.total_bid += p.pairs[static_cast<std::size_t>(idx)].bid;
  return r;
}

PaymentProfile determine_payments(const Instance& inst, const MatchingSet& p,
                                  const WinningSet& s) {
  PaymentProfile profile;
  profile.payments.assign(static_cast<std::size_t>(inst.num_workers()), 0.0);
  for (const auto& w : s.winners) {
    PaymentContribution c;
    c.subset = w.subset;
    c.worker = w.worker;
    c.bid = w.bid;
    c.replaced = replaced_set(inst, p, w.subset, w.worker);
    c.amount = std::max(w.bid, c.replaced.total_bid);
    profile.payments[static_cast<std::size_t>(w.worker)] += c.amount;
    profile.contributions.push_back(std::move(c));
  }
  return profile;
}

UtilityProfile utilities(const PaymentProfile& pay, const Instance& inst, const WinningSet& s) {
  UtilityProfile u;
  u.utilities.assign(static_cast<std::size_t>(inst.num_workers()), 0.0);
  const auto costs = inst.costs();
  for (const auto& c : pay.contributions)
    u.utilities[static_cast<std::size_t>(c.worker)] +=
        c.amount - costs[static_cast<std::size_t>(c.worker)];
  (void)s;
  return u;
}

}  // namespace herald
