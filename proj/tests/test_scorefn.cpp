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

#include "herald/error.hpp"
#include "herald/rng.hpp"
#include "herald/scorefn.hpp"

using namespace herald;

TEST_CASE("sensitivities") {
  CHECK(sensitivity(ScoreKind::kLinear, 5.0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(sensitivity(ScoreKind::kLogarithmic, std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sensitivity(ScoreKind::kLogarithmic, 5.0) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK(sensitivity(ScoreKind::kLogarithmic, 5.0) == doctest::Approx(1.60944).epsilon(1e-5));
  CHECK_THROWS_AS(sensitivity(ScoreKind::kLogarithmic, 1.0), DomainError);
  CHECK_THROWS_AS(sensitivity(ScoreKind::kLinear, 0.5), DomainError);
}

TEST_CASE("equal bids give the uniform distribution") {
  for (ScoreKind kind : {ScoreKind::kLinear, ScoreKind::kLogarithmic}) {
    const auto dist = matching_probabilities(BidProfile{{2.5, 2.5, 2.5, 2.5}}, kind, 0.5, 5.0);
    for (double p : dist.probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("linear probabilities match direct evaluation") {
  const auto dist = matching_probabilities(BidProfile{{1.0, 2.0}}, ScoreKind::kLinear, 0.1, 5.0);
  // Independent evaluation of the normalized form.
  const double w1 = std::exp(-0.1 * 1.0 / (2.0 * 4.0));
  const double w2 = std::exp(-0.1 * 2.0 / (2.0 * 4.0));
  CHECK(dist.probs[0] == doctest::Approx(w1 / (w1 + w2)).epsilon(1e-12));
  CHECK(dist.probs[0] == doctest::Approx(0.50313).epsilon(1e-5));
  CHECK(dist.probs[0] + dist.probs[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("logarithmic probabilities match direct evaluation") {
  const auto dist = matching_probabilities(BidProfile{{1.0, 5.0}}, ScoreKind::kLogarithmic, 0.1, 5.0);
  const double w1 = std::exp(-0.1 * std::log(1.0 / 5.0) / (2.0 * std::log(5.0)));
  const double w2 = std::exp(-0.1 * std::log(5.0 / 5.0) / (2.0 * std::log(5.0)));
  CHECK(dist.probs[0] == doctest::Approx(w1 / (w1 + w2)).epsilon(1e-12));
  CHECK(dist.probs[0] == doctest::Approx(0.51250).epsilon(1e-5));
}

TEST_CASE("random profiles normalize and order by bid") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rng t = rng.stream(static_cast<std::uint64_t>(trial));
    const int m = static_cast<int>(t.next_int(2, 12));
    const double b_max = t.next_real(1.5, 20.0);
    BidProfile bids;
    for (int i = 0; i < m; ++i) bids.bids.push_back(t.next_real(1.0, b_max));
    const ScoreKind kind = trial % 2 == 0 ? ScoreKind::kLinear : ScoreKind::kLogarithmic;
    const double eps = t.next_real(0.01, 2.0);
    const auto dist = matching_probabilities(bids, kind, eps, b_max);

    double total = 0.0;
    for (double p : dist.probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (bids.bids[i] < bids.bids[j]) CHECK(dist.probs[i] > dist.probs[j]);
  }
}

TEST_CASE("epsilon near zero flattens to uniform") {
  const BidProfile bids{{1.0, 2.0, 3.7, 5.0}};
  for (ScoreKind kind : {ScoreKind::kLinear, ScoreKind::kLogarithmic}) {
    const auto dist = matching_probabilities(bids, kind, 1e-12, 5.0);
    for (double p : dist.probs) CHECK(std::fabs(p - 0.25) < 1e-9);
  }
}

TEST_CASE("raising epsilon lowers the most expensive worker's probability") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Rng t = rng.stream(static_cast<std::uint64_t>(trial));
    const int m = static_cast<int>(t.next_int(2, 8));
    BidProfile bids;
    for (int i = 0; i < m; ++i) bids.bids.push_back(t.next_real(1.0, 5.0));
    bids.bids[0] = 5.0;  // ensure a unique maximum
    const ScoreKind kind = trial % 2 == 0 ? ScoreKind::kLinear : ScoreKind::kLogarithmic;
    const double eps = t.next_real(0.05, 1.0);
    const auto lo = matching_probabilities(bids, kind, eps, 5.0);
    const auto hi = matching_probabilities(bids, kind, 2.0 * eps, 5.0);
    bool constant = true;
    for (double b : bids.bids) constant = constant && b == 5.0;
    if (!constant) CHECK(hi.probs[0] < lo.probs[0]);
  }
}

TEST_CASE("domain violations are rejected") {
  CHECK_THROWS_AS(matching_probabilities(BidProfile{{1.0}}, ScoreKind::kLinear, 0.0, 5.0),
                  DomainError);
  CHECK_THROWS_AS(matching_probabilities(BidProfile{{0.5}}, ScoreKind::kLinear, 0.1, 5.0),
                  DomainError);
  CHECK_THROWS_AS(matching_probabilities(BidProfile{{6.0}}, ScoreKind::kLinear, 0.1, 5.0),
                  DomainError);
  CHECK_THROWS_AS(matching_probabilities(BidProfile{{}}, ScoreKind::kLinear, 0.1, 5.0),
                  DomainError);
}
