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

namespace herald {

// Deterministic splitmix64 generator with cheap derived streams.
//
// Every randomized operation takes an explicit seed and derives private
// streams from it, e.g. stream(subset_index) or stream(sample, attempt),
// so results are reproducible independently of iteration order, thread
// count, and platform. No <random> distributions are used anywhere; the
// uniform helpers below are fully specified bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0xA0761D6478BD642FULL)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform real in [lo, hi).
  double next_real(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Independent generator derived from this one's seed and the stream ids.
  // Does not advance this generator.
  Rng stream(std::uint64_t a, std::uint64_t b = 0) const {
    Rng child(0);
    child.state_ = mix(mix(state_ ^ (0x8BB84B93962EACC9ULL * (a + 1))) ^
                       (0x2D358DCCAA6C78A5ULL * (b + 1)));
    return child;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace herald
