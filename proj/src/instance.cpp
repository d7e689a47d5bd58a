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
#include "herald/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "herald/error.hpp"
#include "herald/rng.hpp"

namespace herald {

namespace {

constexpr int kCoverageRepairAttempts = 1000;

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return std::string(buf);
}

}  // namespace

std::vector<double> Instance::costs() const {
  std::vector<double> c(workers.size());
  for (const auto& w : workers) {
    if (w.id >= 0 && w.id < static_cast<int>(c.size())) c[static_cast<std::size_t>(w.id)] = w.cost;
  }
  return c;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto flag = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  const int n = inst.n;
  const int l = inst.num_subsets();
  const int m = inst.num_workers();

  if (n < 1) flag("task count must be >= 1");
  if (n > TaskMask::kMaxTasks) flag(fmt("task count %d exceeds supported maximum %d", n, TaskMask::kMaxTasks));
  if (l < 1) flag("subset family is empty");
  if (m < 1) flag("worker roster is empty");
  if (!(inst.b_max > 1.0)) flag("b_max must be > 1");

  // l < m*n keeps the subset family bounded by worker-task interactions.
  if (m >= 1 && n >= 1 && !(static_cast<long long>(l) < static_cast<long long>(m) * n))
    flag(fmt("l<mn fails: l=%d, m*n=%lld", l, static_cast<long long>(m) * n));

  bool ids_ok = n >= 1 && n <= TaskMask::kMaxTasks;
  std::vector<int> coverage(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (int j = 0; j < l; ++j) {
    const auto& sub = inst.subsets[static_cast<std::size_t>(j)];
    if (sub.empty()) flag(fmt("subset %d is empty", j));
    std::vector<int> seen;
    for (int t : sub) {
      if (t < 0 || t >= n) {
        flag(fmt("subset %d contains out-of-range task id %d", j, t));
        ids_ok = false;
        continue;
      }
      if (std::find(seen.begin(), seen.end(), t) != seen.end()) {
        flag(fmt("subset %d lists task %d twice", j, t));
        continue;
      }
      seen.push_back(t);
      coverage[static_cast<std::size_t>(t)]++;
    }
  }

  if (ids_ok) {
    for (int t = 0; t < n; ++t) {
      if (coverage[static_cast<std::size_t>(t)] == 0)
        flag(fmt("union of subsets misses task %d", t));
      else if (coverage[static_cast<std::size_t>(t)] < 2)
        flag(fmt("coverage<2: task %d appears in only one subset", t));
    }
  }

  // Worker ids must be a permutation of 0..m-1 so profiles index by id.
  std::vector<char> id_seen(static_cast<std::size_t>(std::max(m, 0)), 0);
  for (const auto& w : inst.workers) {
    if (w.id < 0 || w.id >= m) {
      flag(fmt("worker id %d not in 0..m-1", w.id));
      continue;
    }
    if (id_seen[static_cast<std::size_t>(w.id)]) flag(fmt("duplicate worker id %d", w.id));
    id_seen[static_cast<std::size_t>(w.id)] = 1;
    if (inst.b_max > 1.0 && (w.cost < 1.0 || w.cost > inst.b_max))
      flag(fmt("worker %d cost %.6g outside [1, b_max]", w.id, w.cost));
  }

  for (const auto& fm : inst.fixed_matching) {
    if (fm.subset < 0 || fm.subset >= l) flag(fmt("fixed_matching references unknown subset %d", fm.subset));
    if (fm.worker < 0 || fm.worker >= m) flag(fmt("fixed_matching references unknown worker %d", fm.worker));
  }
  if (!inst.fixed_matching.empty()) {
    std::vector<int> per_subset(static_cast<std::size_t>(std::max(l, 0)), 0);
    for (const auto& fm : inst.fixed_matching)
      if (fm.subset >= 0 && fm.subset < l) per_subset[static_cast<std::size_t>(fm.subset)]++;
    for (int j = 0; j < l; ++j)
      if (per_subset[static_cast<std::size_t>(j)] != 1)
        flag(fmt("fixed_matching must assign subset %d exactly once", j));
  }

  return rep;
}

namespace {

// Uniform k-subset of 0..n-1 via partial Fisher-Yates; sorted output.
std::vector<int> draw_subset(Rng& rng, int n, int k, int forced_task) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  if (forced_task >= 0) std::swap(pool[0], pool[static_cast<std::size_t>(forced_task)]);
  const int start = forced_task >= 0 ? 1 : 0;
  for (int i = start; i < k; ++i) {
    const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Instance generate_instance(const InstanceConfig& cfg, std::uint64_t seed) {
  if (cfg.n < 1 || cfg.m < 1) throw GenerationExhausted("instance config has no tasks or workers");
  const int l = cfg.effective_l();
  if (!(static_cast<long long>(l) < static_cast<long long>(cfg.m) * cfg.n))
    throw GenerationExhausted(fmt("config violates l<mn: l=%d m=%d n=%d", l, cfg.m, cfg.n));
  if (cfg.subset_size.lo < 1 || cfg.subset_size.lo > cfg.subset_size.hi || cfg.subset_size.hi > cfg.n)
    throw GenerationExhausted(fmt("subset-size interval [%d,%d] infeasible for n=%d",
                                  cfg.subset_size.lo, cfg.subset_size.hi, cfg.n));
  if (!(cfg.b_max > 1.0) || cfg.cost.lo < 1.0 || cfg.cost.hi < cfg.cost.lo || cfg.cost.hi > cfg.b_max)
    throw GenerationExhausted("cost interval must satisfy 1 <= lo <= hi <= b_max, b_max > 1");
  if (cfg.n > TaskMask::kMaxTasks)
    throw GenerationExhausted(fmt("n=%d exceeds supported maximum %d", cfg.n, TaskMask::kMaxTasks));

  Rng root(seed);

  Instance inst;
  inst.n = cfg.n;
  inst.b_max = cfg.b_max;

  Rng cost_rng = root.stream(0x1001);
  inst.workers.resize(static_cast<std::size_t>(cfg.m));
  for (int i = 0; i < cfg.m; ++i) {
    inst.workers[static_cast<std::size_t>(i)].id = i;
    inst.workers[static_cast<std::size_t>(i)].cost = cost_rng.next_real(cfg.cost.lo, cfg.cost.hi);
  }

  Rng size_rng = root.stream(0x1002);
  Rng member_rng = root.stream(0x1003);
  inst.subsets.resize(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) {
    const int size = static_cast<int>(size_rng.next_int(cfg.subset_size.lo, cfg.subset_size.hi));
    inst.subsets[static_cast<std::size_t>(j)] = draw_subset(member_rng, cfg.n, size, -1);
  }

  // Coverage repair: while some task sits in fewer than two subsets,
  // redraw one subset (fresh size, membership forced to include the
  // deficient task). Bounded attempts; failure signals infeasibility.
  Rng repair_rng = root.stream(0x1004);
  for (int attempt = 0;; ++attempt) {
    std::vector<int> coverage(static_cast<std::size_t>(cfg.n), 0);
    for (const auto& sub : inst.subsets)
      for (int t : sub) coverage[static_cast<std::size_t>(t)]++;
    int deficient = -1;
    for (int t = 0; t < cfg.n; ++t)
      if (coverage[static_cast<std::size_t>(t)] < 2) {
        deficient = t;
        break;
      }
    if (deficient < 0) break;
    if (attempt >= kCoverageRepairAttempts)
      throw GenerationExhausted(
          fmt("coverage repair exhausted after %d attempts (n=%d l=%d sizes [%d,%d])",
              kCoverageRepairAttempts, cfg.n, l, cfg.subset_size.lo, cfg.subset_size.hi));

    // Redraw a subset that does not already contain the deficient task.
    int j = static_cast<int>(repair_rng.next_below(static_cast<std::uint64_t>(l)));
    for (int probe = 0; probe < l; ++probe) {
      const auto& sub = inst.subsets[static_cast<std::size_t>(j)];
      if (std::find(sub.begin(), sub.end(), deficient) == sub.end()) break;
      j = (j + 1) % l;
    }
    const int size = static_cast<int>(repair_rng.next_int(cfg.subset_size.lo, cfg.subset_size.hi));
    inst.subsets[static_cast<std::size_t>(j)] = draw_subset(repair_rng, cfg.n, size, deficient);
  }

  return inst;
}

// ---- JSON -------------------------------------------------------------

std::string instance_to_json(const Instance& inst, int indent) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["b_max"] = inst.b_max;
  j["subsets"] = inst.subsets;
  auto& workers = j["workers"] = nlohmann::json::array();
  for (const auto& w : inst.workers) workers.push_back({{"id", w.id}, {"cost", w.cost}});
  if (!inst.fixed_matching.empty()) {
    auto& fixed = j["fixed_matching"] = nlohmann::json::array();
    for (const auto& fm : inst.fixed_matching)
      fixed.push_back({{"subset", fm.subset}, {"worker", fm.worker}});
  }
  return j.dump(indent) + "\n";
}

Instance instance_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("instance JSON parse error: ") + e.what());
  }
  try {
    Instance inst;
    inst.n = j.at("n").get<int>();
    inst.b_max = j.at("b_max").get<double>();
    inst.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
    for (const auto& w : j.at("workers"))
      inst.workers.push_back({w.at("id").get<int>(), w.at("cost").get<double>()});
    if (j.contains("fixed_matching"))
      for (const auto& fm : j.at("fixed_matching"))
        inst.fixed_matching.push_back({fm.at("subset").get<int>(), fm.at("worker").get<int>()});
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("instance JSON schema error: ") + e.what());
  }
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

}  // namespace herald
