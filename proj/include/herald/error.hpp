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

#include <stdexcept>
#include <string>

namespace herald {

// Base class for all herald failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument is outside its mathematical domain (bad epsilon, bid out of
// [1, b_max], b_max <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance generation could not satisfy the structural constraints within
// the attempt cap; the configuration is infeasible.
class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

// Constrained matching could not satisfy the two-distinct-workers-per-task
// rule within the resample cap.
class ConstraintExhausted : public Error {
 public:
  using Error::Error;
};

// A requested task lies in no available subset, so no cover exists.
class Uncoverable : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard size cap of an exact algorithm.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// Exact enumeration would exceed its cardinality cap.
class EnumTooLarge : public Error {
 public:
  using Error::Error;
};

// A winner's subset cannot be re-covered by other workers' pairs.
class Irreplaceable : public Error {
 public:
  using Error::Error;
};

// No golden case registered under the requested name.
class UnknownCase : public Error {
 public:
  using Error::Error;
};

}  // namespace herald
