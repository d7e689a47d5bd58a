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

#include <string>
#include <utility>
#include <vector>

#include "herald/instance.hpp"

namespace herald {

// An embedded regression case: a pinned instance plus the end-to-end
// values a replay must reproduce (tolerance 1e-9 on currency values).
struct GoldenCase {
  std::string name;
  Instance instance;  // carries the pinned matching
  int k = 1;
  double expected_threshold = 0.0;
  std::vector<std::pair<int, int>> expected_winners;  // (subset, worker), selection order
  std::vector<double> expected_payments;              // per worker id
};

// Returns the embedded case; throws UnknownCase for unregistered names.
// Registered: "example2-k1", "example2-k2".
GoldenCase load_golden(const std::string& name);

std::vector<std::string> golden_case_names();

}  // namespace herald
