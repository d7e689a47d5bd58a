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
#include <vector>

#include "herald/instance.hpp"

namespace herald {

// The two exponential-mechanism score functions. Linear scores bids as -b,
// logarithmic as -ln(b).
enum class ScoreKind { kLinear, kLogarithmic };

std::string to_string(ScoreKind kind);
ScoreKind score_kind_from_string(const std::string& name);

// Sensitivity of the score function over bids in [1, b_max]:
// (b_max - 1) / b_max for linear, ln(b_max) for logarithmic.
// Throws DomainError when b_max <= 1.
double sensitivity(ScoreKind kind, double b_max);

// Normalized per-worker matching distribution produced by the exponential
// mechanism; probs align with worker ids and sum to 1.
struct MatchingDistribution {
  std::vector<double> probs;
  double epsilon = 0.0;
  ScoreKind kind = ScoreKind::kLinear;
  double b_max = 0.0;

  int num_workers() const { return static_cast<int>(probs.size()); }
};

// Normalized matching probabilities:
//   linear:       Pr(b_i) ∝ exp(-eps * b_i / (2 (b_max - 1)))
//   logarithmic:  Pr(b_i) ∝ exp(-eps * ln(b_i / b_max) / (2 ln b_max))
// The maximum exponent is subtracted before exponentiation so large
// eps*b_i cannot underflow the normalization. Throws DomainError for
// eps <= 0, b_max <= 1, or bids outside [1, b_max].
MatchingDistribution matching_probabilities(const BidProfile& bids, ScoreKind kind,
                                            double epsilon, double b_max);

}  // namespace herald
