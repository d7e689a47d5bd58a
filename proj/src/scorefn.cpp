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
#include "herald/scorefn.hpp"

#include <algorithm>
#include <cmath>

#include "herald/error.hpp"

namespace herald {

std::string to_string(ScoreKind kind) {
  return kind == ScoreKind::kLinear ? "lin" : "log";
}

ScoreKind score_kind_from_string(const std::string& name) {
  if (name == "lin" || name == "linear") return ScoreKind::kLinear;
  if (name == "log" || name == "logarithmic") return ScoreKind::kLogarithmic;
  throw DomainError("unknown score kind: " + name);
}

double sensitivity(ScoreKind kind, double b_max) {
  if (!(b_max > 1.0)) throw DomainError("sensitivity requires b_max > 1");
  return kind == ScoreKind::kLinear ? (b_max - 1.0) / b_max : std::log(b_max);
}

MatchingDistribution matching_probabilities(const BidProfile& bids, ScoreKind kind,
                                            double epsilon, double b_max) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (!(b_max > 1.0)) throw DomainError("b_max must be > 1");
  if (bids.bids.empty()) throw DomainError("empty bid profile");

  const std::size_t m = bids.bids.size();
  std::vector<double> exponent(m);
  const double log_bmax = std::log(b_max);
  for (std::size_t i = 0; i < m; ++i) {
    const double b = bids.bids[i];
    if (!(b >= 1.0) || !(b <= b_max)) throw DomainError("bid outside [1, b_max]");
    exponent[i] = kind == ScoreKind::kLinear
                      ? -epsilon * b / (2.0 * (b_max - 1.0))
                      : -epsilon * std::log(b / b_max) / (2.0 * log_bmax);
  }

  const double max_exp = *std::max_element(exponent.begin(), exponent.end());
  MatchingDistribution dist;
  dist.epsilon = epsilon;
  dist.kind = kind;
  dist.b_max = b_max;
  dist.probs.resize(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    dist.probs[i] = std::exp(exponent[i] - max_exp);
    total += dist.probs[i];
  }
  for (auto& p : dist.probs) p /= total;
  return dist;
}

}  // namespace herald
