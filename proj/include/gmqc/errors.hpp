// Copyright 2026 The gmqc Authors
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
#include <string>

namespace gmqc {

/// Precondition on an argument was violated (non-Hermitian input, bad label, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense construction would exceed the configured size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A measurement branch with zero weight was selected.
class ImpossibleOutcomeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical result contradicts a structural guarantee, e.g. no zero-energy state.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or invalid logical circuit.
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A wire ran out of bulk sites before the circuit finished.
class BudgetExhaustedError : public std::runtime_error {
 public:
  BudgetExhaustedError(const std::string& what, std::size_t gate_index, int wire)
      : std::runtime_error(what), gate_index_(gate_index), wire_(wire) {}

  std::size_t gate_index() const { return gate_index_; }
  int wire() const { return wire_; }

 private:
  std::size_t gate_index_;
  int wire_;
};

}  // namespace gmqc
