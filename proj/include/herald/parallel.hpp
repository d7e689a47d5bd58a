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

#include <cstddef>
#include <functional>

namespace herald {

// Effective worker count: min(hardware_concurrency, HERALD_THREADS).
// HERALD_THREADS=1 forces serial execution.
int thread_budget();

// Runs fn(i) for i in [0, count). Work items must be independent; each one
// writes only its own output slot, so results do not depend on the thread
// count and aggregation stays deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int max_threads = 0);

}  // namespace herald
