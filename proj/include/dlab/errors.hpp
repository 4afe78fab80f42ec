// Copyright 2026 The dlab Authors
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

#pragma once

#include <stdexcept>

namespace dlab {

/// An argument lies outside the mathematical domain of an operation
/// (e.g. p >= ln 2 for the parameter budget, delta outside (0, 1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size cap was exceeded (dense materialization, qubit width).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Eigensolver failure or a non-finite value during optimization.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dlab
