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
#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "herald/error.hpp"
#include "herald/matching.hpp"
#include "herald/rng.hpp"

using namespace herald;

namespace {

Instance single_worker_instance() {
  Instance inst;
  inst.n = 2;
  inst.b_max = 5.0;
  inst.subsets = {{0, 1}, {0}, {1}};
  inst.workers = {{0, 2.0}};
  return inst;
}

}  // namespace

TEST_CASE("a lone worker is matched to every subset") {
  const Instance inst = single_worker_instance();
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 0.1, 5.0);
  const MatchingSet p = match(inst, bids, dist, 3);
  for (const auto& pair : p.pairs) {
    CHECK(pair.worker == 0);
    CHECK(pair.bid == 2.0);
  }
}

TEST_CASE("pinned matching reproduces the identity assignment") {
  const MatchingSet p = test::seven_subset_matching();
  REQUIRE(p.size() == 7);
  for (int j = 0; j < 7; ++j) {
    CHECK(p.pairs[j].subset == j);
    CHECK(p.pairs[j].worker == j);
  }
  CHECK(p.pairs[0].bid == doctest::Approx(1.4));
  CHECK(p.pairs[6].bid == doctest::Approx(3.6));
}

TEST_CASE("constrained matching with one worker is impossible") {
  const Instance inst = single_worker_instance();
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 0.1, 5.0);
  CHECK_THROWS_AS(match(inst, bids, dist, 3, MatchMode::kConstrained), ConstraintExhausted);
}

TEST_CASE("constrained matching satisfies the two-worker rule") {
  const Instance inst = test::seven_subset_auction();
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLogarithmic, 0.3, 5.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MatchingSet p = match(inst, bids, dist, seed, MatchMode::kConstrained);
    CHECK(has_two_distinct_workers_per_task(inst, p));
  }
}

TEST_CASE("matching is deterministic in the seed") {
  const Instance inst = test::seven_subset_auction();
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 0.1, 5.0);
  const MatchingSet a = match(inst, bids, dist, 17);
  const MatchingSet b = match(inst, bids, dist, 17);
  const MatchingSet c = match(inst, bids, dist, 18);
  REQUIRE(a.size() == b.size());
  bool same = true, all_same_c = true;
  for (int j = 0; j < a.size(); ++j) {
    same = same && a.pairs[j].worker == b.pairs[j].worker;
    all_same_c = all_same_c && a.pairs[j].worker == c.pairs[j].worker;
  }
  CHECK(same);
  CHECK_FALSE(all_same_c);  // different seed should move at least one draw
}

TEST_CASE("sampling frequencies converge to the distribution") {
  const Instance inst = test::seven_subset_auction();
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 1.0, 5.0);

  const int draws = 100000;
  std::vector<int> hits(static_cast<std::size_t>(inst.num_workers()), 0);
  for (int s = 0; s < draws; ++s) {
    const MatchingSet p = match(inst, bids, dist, static_cast<std::uint64_t>(s));
    hits[static_cast<std::size_t>(p.pairs[0].worker)]++;
  }
  for (int w = 0; w < inst.num_workers(); ++w) {
    const double p = dist.probs[static_cast<std::size_t>(w)];
    const double freq = static_cast<double>(hits[static_cast<std::size_t>(w)]) / draws;
    const double se = std::sqrt(p * (1.0 - p) / draws);
    CHECK(std::fabs(freq - p) < 3.0 * se);
  }
}

TEST_CASE("outcome probabilities sum to one over all sequences") {
  Instance inst;
  inst.n = 3;
  inst.b_max = 5.0;
  inst.subsets = {{0, 1}, {1, 2}, {0, 2}};
  inst.workers = {{0, 1.5}, {1, 2.5}, {2, 3.5}, {3, 4.5}};
  const BidProfile bids = BidProfile::truthful(inst);
  const auto dist = matching_probabilities(bids, ScoreKind::kLogarithmic, 0.7, 5.0);

  const int m = inst.num_workers(), l = inst.num_subsets();
  double total = 0.0;
  std::vector<int> pick(static_cast<std::size_t>(l), 0);
  for (;;) {
    MatchingSet outcome;
    for (int j = 0; j < l; ++j)
      outcome.pairs.push_back({j, pick[static_cast<std::size_t>(j)], bids.bids[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]});
    const double prob = outcome_probability(outcome, dist);
    CHECK(prob > 0.0);
    total += prob;
    int pos = l - 1;
    while (pos >= 0) {
      if (++pick[static_cast<std::size_t>(pos)] < m) break;
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("outcome probability equals the product of factors") {
  MatchingDistribution uniform4;
  uniform4.probs = {0.25, 0.25, 0.25, 0.25};
  MatchingSet one;
  one.pairs = {{0, 2, 0.0}};
  CHECK(outcome_probability(one, uniform4) == doctest::Approx(0.25).epsilon(1e-12));

  MatchingDistribution biased;
  biased.probs = {0.6, 0.4};
  MatchingSet two;
  two.pairs = {{0, 0, 0.0}, {1, 1, 0.0}};
  CHECK(outcome_probability(two, biased) == doctest::Approx(0.24).epsilon(1e-12));
}
