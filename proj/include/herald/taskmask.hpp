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

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace herald {

// Fixed-width bitset over task ids 0..kMaxTasks-1. Task ids are dense
// integers, so sets of tasks are kept as bitmasks throughout selection,
// payment, and the audits.
class TaskMask {
 public:
  static constexpr int kMaxTasks = 256;
  static constexpr int kWords = kMaxTasks / 64;

  TaskMask() = default;

  static TaskMask full(int n) {
    TaskMask r;
    for (int i = 0; i < n; ++i) r.set(i);
    return r;
  }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool intersects(const TaskMask& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  int intersect_count(const TaskMask& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  TaskMask intersect(const TaskMask& o) const {
    TaskMask r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  // Removes o's bits from this set.
  void subtract(const TaskMask& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
  }

  void merge(const TaskMask& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
  }

  bool contains(const TaskMask& o) const {
    for (int i = 0; i < kWords; ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool operator==(const TaskMask& o) const { return w_ == o.w_; }

  std::vector<int> to_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < kMaxTasks; ++i)
      if (test(i)) ids.push_back(i);
    return ids;
  }

  static TaskMask from_ids(const std::vector<int>& ids) {
    TaskMask r;
    for (int i : ids) r.set(i);
    return r;
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace herald
