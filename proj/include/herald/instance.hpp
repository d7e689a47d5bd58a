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
#include <string>
#include <vector>

#include "herald/taskmask.hpp"

namespace herald {

struct Worker {
  int id = 0;
  double cost = 1.0;  // true cost c_i, in [1, b_max]
};

// One pinned subset-to-worker assignment, used to bypass randomized
// matching in regression fixtures.
struct FixedMatch {
  int subset = 0;
  int worker = 0;
};

// A reverse-auction problem instance: n tasks (ids 0..n-1), l task subsets
// whose union is the full task set, m workers with private costs, and the
// bid ceiling b_max (the floor is fixed at 1).
struct Instance {
  int n = 0;
  double b_max = 5.0;
  std::vector<std::vector<int>> subsets;
  std::vector<Worker> workers;
  std::vector<FixedMatch> fixed_matching;  // optional; empty means none

  int num_tasks() const { return n; }
  int num_subsets() const { return static_cast<int>(subsets.size()); }
  int num_workers() const { return static_cast<int>(workers.size()); }

  // Bitmask of subset j's tasks.
  TaskMask subset_mask(int j) const { return TaskMask::from_ids(subsets[static_cast<std::size_t>(j)]); }

  // Workers' true costs in id order (the truthful bid profile).
  std::vector<double> costs() const;
};

// Bids aligned with worker ids; under truthful play bids == costs.
struct BidProfile {
  std::vector<double> bids;

  static BidProfile truthful(const Instance& inst) { return BidProfile{inst.costs()}; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every structural constraint and reports all violations; never
// throws. An empty report means the instance is valid.
ValidationReport validate_instance(const Instance& inst);

// Closed interval.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct IntInterval {
  int lo = 0;
  int hi = 0;
};

// A concrete generation recipe for one instance.
struct InstanceConfig {
  int n = 0;           // task count
  int m = 0;           // worker count
  int l = 0;           // subset count; 0 means default l = m
  Interval cost{1.0, 5.0};
  IntInterval subset_size{1, 1};
  double b_max = 5.0;

  int effective_l() const { return l > 0 ? l : m; }
};

// Draws costs and subset sizes uniformly from their intervals and subset
// membership uniformly without replacement. Subsets violating the
// two-subsets-per-task coverage rule are regenerated individually (size
// redrawn from the same interval) up to a bounded number of attempts.
// Deterministic for equal (cfg, seed). Throws GenerationExhausted when the
// configuration cannot be satisfied.
Instance generate_instance(const InstanceConfig& cfg, std::uint64_t seed);

// ---- JSON interchange -------------------------------------------------
//
// {"n": int, "b_max": number,
//  "subsets": [[int,...],...],
//  "workers": [{"id": int, "cost": number},...],
//  "fixed_matching": [{"subset": int, "worker": int},...]}   (optional)

std::string instance_to_json(const Instance& inst, int indent = 2);
Instance instance_from_json(const std::string& text);
Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

}  // namespace herald
