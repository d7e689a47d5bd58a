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

#include <vector>

namespace herald {

double mean(const std::vector<double>& xs);

// Spearman rank correlation with average ranks for ties. Returns 0 when
// either side is constant.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace herald
