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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrucc/pauli.hpp"

namespace mrucc {

/// Largest register the dense simulator allocates.
inline constexpr int kMaxStateQubits = 26;

/**
 * @brief Dense amplitude vector over 2^n basis states.
 *
 * Bit q of a basis index is the occupation of qubit q (qubit 0 is the
 * least significant bit).
 */
class Statevector {
 public:
  explicit Statevector(int n_qubits);
  Statevector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }

  std::span<Complex> amplitudes() { return amplitudes_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex& operator[](std::uint64_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::uint64_t i) const { return amplitudes_[i]; }

  double norm() const;
  void normalize();

  /// Amplitude weight sum |a_j|^2 over indices with popcount(j) != weight.
  double weight_outside_sector(int weight) const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

Complex inner_product(const Statevector& bra, const Statevector& ket);

/// |HF> with bits set exactly on `occupied`.
Statevector hf_state(int n_qubits, const std::vector<int>& occupied);

/**
 * @brief Particle-number-conserving Givens rotation on qubits (qa, qb).
 *
 * With the pair written as |b_qa b_qb>: |01> -> cos t|01> + sin t|10>,
 * |10> -> -sin t|01> + cos t|10>; |00> and |11> are untouched.
 */
void apply_pnc(Statevector& state, int qa, int qb, double theta);

/// Derivative of the rotation w.r.t. theta applied in place (not unitary).
void apply_pnc_derivative(Statevector& state, int qa, int qb, double theta);

/// out = op |in>, computed label by label without materializing matrices.
void apply_pauli_sum(const PauliSum& op, std::span<const Complex> in,
                     std::span<Complex> out);
Statevector apply_pauli_sum(const PauliSum& op, const Statevector& state);

/// <psi|op|psi> for Hermitian `op`. Throws on a non-Hermitian operator or if
/// the imaginary part of the result exceeds 1e-9.
double expectation(const Statevector& state, const PauliSum& op);

/// <psi|op|psi> for any operator.
Complex expectation_complex(const Statevector& state, const PauliSum& op);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief e^{gen}|psi> for anti-Hermitian `gen` by a scaled Taylor series.
 *
 * The generator is split into s steps with ||gen||_1 / s <= 1; each step
 * sums Taylor terms until the next term's norm drops below tol / s.
 */
Statevector apply_exponential(const Statevector& state, const PauliSum& gen,
                              double tol = 1e-12, int max_terms_per_step = 200);

}  // namespace mrucc
