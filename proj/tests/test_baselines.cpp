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

#include "helpers.hpp"
#include "herald/baselines.hpp"
#include "herald/matching.hpp"
#include "herald/payment.hpp"
#include "herald/rng.hpp"
#include "herald/scorefn.hpp"

using namespace herald;

TEST_CASE("greedy cost-effectiveness selection on the reference auction") {
  const Instance inst = test::seven_subset_auction();
  const MatchingSet p = test::seven_subset_matching();
  const WinningSet s = cone_select(inst, p);
  REQUIRE(s.size() == 3);
  CHECK(s.winners[0].subset == 0);
  CHECK(s.winners[1].subset == 3);
  CHECK(s.winners[2].subset == 1);
}

TEST_CASE("greedy lowest-bid selection on the reference auction") {
  const Instance inst = test::seven_subset_auction();
  const MatchingSet p = test::seven_subset_matching();
  const WinningSet s = cosy_select(inst, p);
  REQUIRE(s.size() == 3);
  CHECK(s.winners[0].worker == 0);
  CHECK(s.winners[1].worker == 1);
  CHECK(s.winners[2].worker == 3);
}

TEST_CASE("a single all-covering pair wins under both baselines") {
  Instance inst;
  inst.n = 3;
  inst.b_max = 5.0;
  inst.subsets = {{0, 1, 2}};
  inst.workers = {{0, 2.0}};
  MatchingSet p;
  p.pairs = {{0, 0, 2.0}};
  CHECK(cone_select(inst, p).size() == 1);
  CHECK(cosy_select(inst, p).size() == 1);
}

TEST_CASE("equal bids fall back to the worker-id tie-break") {
  Instance inst;
  inst.n = 2;
  inst.b_max = 5.0;
  inst.subsets = {{0}, {1}, {0, 1}};
  inst.workers = {{0, 2.0}, {1, 2.0}, {2, 2.0}};
  MatchingSet p;
  p.pairs = {{0, 2, 2.0}, {1, 1, 2.0}, {2, 0, 2.0}};
  const WinningSet s = cosy_select(inst, p);
  // Worker 0's pair (subset 2) covers everything and has the lowest id.
  REQUIRE(s.size() == 1);
  CHECK(s.winners[0].worker == 0);
  CHECK(s.winners[0].subset == 2);
}

TEST_CASE("lowest-bid greedy equals zero-threshold selection") {
  Rng rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    Rng t = rng.stream(static_cast<std::uint64_t>(trial));
    const InstanceConfig cfg = test::small_config(t);
    const Instance inst = generate_instance(cfg, t.next_u64());
    const BidProfile bids = BidProfile::truthful(inst);
    const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 0.1, inst.b_max);
    const MatchingSet p = match(inst, bids, dist, t.next_u64());

    const WinningSet a = cosy_select(inst, p);
    const WinningSet b = select_winners(inst, p, 0.0);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
      CHECK(a.winners[i].subset == b.winners[i].subset);
      CHECK(a.winners[i].worker == b.winners[i].worker);
    }
  }
}

TEST_CASE("min-CF greedy equals the main mechanism when every round is type I") {
  const Instance inst = test::seven_subset_auction();
  const MatchingSet p = test::seven_subset_matching();
  const WinningSet herald_s = select_winners(inst, p, 125.44);
  bool all_type1 = true;
  for (const auto& w : herald_s.winners) all_type1 = all_type1 && w.selection_type == SelectionType::kTypeI;
  REQUIRE(all_type1);
  const WinningSet cone_s = cone_select(inst, p);
  REQUIRE(cone_s.size() == herald_s.size());
  for (int i = 0; i < cone_s.size(); ++i) {
    CHECK(cone_s.winners[i].subset == herald_s.winners[i].subset);
    CHECK(cone_s.winners[i].worker == herald_s.winners[i].worker);
  }
}

TEST_CASE("baseline winning sets cover everything with disjoint increments") {
  Rng rng(62);
  for (int trial = 0; trial < 25; ++trial) {
    Rng t = rng.stream(static_cast<std::uint64_t>(trial));
    const InstanceConfig cfg = test::small_config(t);
    const Instance inst = generate_instance(cfg, t.next_u64());
    const BidProfile bids = BidProfile::truthful(inst);
    const auto dist = matching_probabilities(bids, ScoreKind::kLogarithmic, 0.1, inst.b_max);
    const MatchingSet p = match(inst, bids, dist, t.next_u64());

    for (const WinningSet& s : {cone_select(inst, p), cosy_select(inst, p)}) {
      TaskMask seen;
      for (const auto& w : s.winners) {
        CHECK_FALSE(w.incremental_coverage.none());
        CHECK_FALSE(seen.intersects(w.incremental_coverage));
        seen.merge(w.incremental_coverage);
      }
      CHECK(seen == TaskMask::full(inst.n));
    }
  }
}

TEST_CASE("baselines are monotone in a winner's bid") {
  Rng rng(63);
  for (int trial = 0; trial < 15; ++trial) {
    Rng t = rng.stream(static_cast<std::uint64_t>(trial));
    const InstanceConfig cfg = test::small_config(t);
    const Instance inst = generate_instance(cfg, t.next_u64());
    const BidProfile bids = BidProfile::truthful(inst);
    const auto dist = matching_probabilities(bids, ScoreKind::kLinear, 0.1, inst.b_max);
    const MatchingSet p = match(inst, bids, dist, t.next_u64());

    for (bool use_cone : {true, false}) {
      const WinningSet s = use_cone ? cone_select(inst, p) : cosy_select(inst, p);
      for (const auto& w : s.winners) {
        MatchingSet modified = p;
        for (auto& pair : modified.pairs)
          if (pair.subset == w.subset && pair.worker == w.worker)
            pair.bid = std::max(1.0, pair.bid * 0.5);
        const WinningSet replay = use_cone ? cone_select(inst, modified) : cosy_select(inst, modified);
        CHECK(replay.contains_pair(w.subset, w.worker));
      }
    }
  }
}
