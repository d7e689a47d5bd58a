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
#include "herald/baselines.hpp"

#include <limits>

namespace herald {

WinningSet cone_select(const Instance& inst, const MatchingSet& p) {
  WinningSet s = select_winners(inst, p, std::numeric_limits<double>::infinity());
  s.threshold = std::numeric_limits<double>::infinity();
  return s;
}

WinningSet cosy_select(const Instance& inst, const MatchingSet& p) {
  return select_winners(inst, p, 0.0);
}

}  // namespace herald
