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

#include <algorithm>

#include "herald/fixtures.hpp"
#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/rng.hpp"

namespace herald::test {

inline Instance seven_subset_auction() { return load_golden("example2-k1").instance; }

inline MatchingSet seven_subset_matching() {
  const Instance inst = seven_subset_auction();
  return matching_from_fixed(inst, BidProfile::truthful(inst));
}

// Small feasible instance configuration for randomized property tests:
// n in [5,10], worker count scaled so coverage repair succeeds.
inline InstanceConfig small_config(Rng& rng) {
  const int m = static_cast<int>(rng.next_int(5, 8));
  const int n_hi = std::min<std::int64_t>(10, (7 * m) / 5);
  const int n = static_cast<int>(rng.next_int(5, n_hi));
  InstanceConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.l = m;
  cfg.cost = {1.0, 5.0};
  cfg.subset_size = {2, std::min(4, n - 1)};
  cfg.b_max = 5.0;
  return cfg;
}

}  // namespace herald::test
