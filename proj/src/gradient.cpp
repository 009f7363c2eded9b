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

#include "mrucc/gradient.hpp"

#include <stdexcept>
#include <string>

namespace mrucc {

namespace {

void check_sizes(const LinearOperator& h, const AnsatzLayout& layout,
                 const std::vector<double>& theta, const Statevector& reference) {
  if (theta.size() != layout.gates.size()) {
    throw std::invalid_argument("parameter vector has " + std::to_string(theta.size()) +
                                " entries for " + std::to_string(layout.gates.size()) +
                                " gates");
  }
  if (h.n_qubits() != layout.n_qubits || reference.n_qubits() != layout.n_qubits) {
    throw std::invalid_argument("Hamiltonian, layout and reference registers differ");
  }
}

}  // namespace

EnergyGradient stage1_energy_gradient(const LinearOperator& hamiltonian,
                                      const AnsatzLayout& layout,
                                      const std::vector<double>& theta,
                                      const Statevector& reference) {
  check_sizes(hamiltonian, layout, theta, reference);
  Statevector psi = prepare_state(layout, theta, reference);
  Statevector lambda = hamiltonian(psi);
  EnergyGradient out;
  out.energy = inner_product(psi, lambda).real();
  out.gradient.assign(theta.size(), 0.0);

  Statevector mu(psi.n_qubits());
  for (std::size_t k = theta.size(); k-- > 0;) {
    const auto [qa, qb] = layout.gates[k];
    apply_pnc(psi, qa, qb, -theta[k]);
    mu = psi;
    apply_pnc_derivative(mu, qa, qb, theta[k]);
    out.gradient[k] = 2.0 * inner_product(lambda, mu).real();
    apply_pnc(lambda, qa, qb, -theta[k]);
  }
  return out;
}

std::vector<double> stage1_gradient(const LinearOperator& hamiltonian,
                                    const AnsatzLayout& layout,
                                    const std::vector<double>& theta,
                                    const Statevector& reference) {
  return stage1_energy_gradient(hamiltonian, layout, theta, reference).gradient;
}

std::vector<double> stage1_gradient(const PauliSum& hamiltonian, const AnsatzLayout& layout,
                                    const std::vector<double>& theta,
                                    const Statevector& reference) {
  if (!is_hermitian(hamiltonian, 1e-10)) {
    throw std::invalid_argument("stage-1 Hamiltonian must be Hermitian");
  }
  return stage1_gradient(PauliOperator(hamiltonian), layout, theta, reference);
}

std::vector<double> stage1_gradient_fd(const LinearOperator& hamiltonian,
                                       const AnsatzLayout& layout,
                                       const std::vector<double>& theta,
                                       const Statevector& reference, double step) {
  check_sizes(hamiltonian, layout, theta, reference);
  std::vector<double> grad(theta.size());
  std::vector<double> shifted = theta;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    shifted[k] = theta[k] + step;
    const double ep = hamiltonian.expectation(prepare_state(layout, shifted, reference));
    shifted[k] = theta[k] - step;
    const double em = hamiltonian.expectation(prepare_state(layout, shifted, reference));
    shifted[k] = theta[k];
    grad[k] = (ep - em) / (2.0 * step);
  }
  return grad;
}

}  // namespace mrucc
