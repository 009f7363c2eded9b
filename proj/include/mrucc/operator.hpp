// Copyright 2026 The mrucc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

#include "mrucc/pauli.hpp"
#include "mrucc/state.hpp"

namespace mrucc {

/// Something that maps a full-register amplitude vector to another.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual int n_qubits() const = 0;
  virtual void apply(std::span<const Complex> in, std::span<Complex> out) const = 0;

  Statevector operator()(const Statevector& state) const;
  /// Real part of <psi|op|psi>.
  double expectation(const Statevector& state) const;
};

/// Applies a PauliSum term by term.
class PauliOperator final : public LinearOperator {
 public:
  explicit PauliOperator(PauliSum op) : op_(std::move(op)) {}

  int n_qubits() const override { return op_.n_qubits(); }
  void apply(std::span<const Complex> in, std::span<Complex> out) const override {
    apply_pauli_sum(op_, in, out);
  }
  const PauliSum& pauli_sum() const { return op_; }

 private:
  PauliSum op_;
};

}  // namespace mrucc
