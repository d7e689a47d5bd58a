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

#include "herald/selection.hpp"

namespace herald {

// CONE: greedy by cost-effectiveness. Equivalent to winner selection with
// an infinite threshold (every round type I).
WinningSet cone_select(const Instance& inst, const MatchingSet& p);

// COSY: greedy by raw bid among pairs still covering a new task.
// Equivalent to winner selection with threshold 0 (every round type II).
WinningSet cosy_select(const Instance& inst, const MatchingSet& p);

}  // namespace herald
