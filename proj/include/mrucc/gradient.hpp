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

#include <vector>

#include "mrucc/ansatz.hpp"
#include "mrucc/operator.hpp"

namespace mrucc {

struct EnergyGradient {
  double energy = 0.0;
  std::vector<double> gradient;
};

/**
 * @brief E(theta) = <psi(theta)|H|psi(theta)> and dE/dtheta by reverse sweep.
 *
 * One forward pass builds psi; lambda = H psi is then pulled back through
 * the inverse gates while psi is unwound, so the full gradient costs one
 * operator application and O(gates) state passes.
 */
EnergyGradient stage1_energy_gradient(const LinearOperator& hamiltonian,
                                      const AnsatzLayout& layout,
                                      const std::vector<double>& theta,
                                      const Statevector& reference);

std::vector<double> stage1_gradient(const LinearOperator& hamiltonian,
                                    const AnsatzLayout& layout,
                                    const std::vector<double>& theta,
                                    const Statevector& reference);

std::vector<double> stage1_gradient(const PauliSum& hamiltonian, const AnsatzLayout& layout,
                                    const std::vector<double>& theta,
                                    const Statevector& reference);

/// Central differences of the stage-1 energy; test oracle only.
std::vector<double> stage1_gradient_fd(const LinearOperator& hamiltonian,
                                       const AnsatzLayout& layout,
                                       const std::vector<double>& theta,
                                       const Statevector& reference, double step = 1e-5);

}  // namespace mrucc
