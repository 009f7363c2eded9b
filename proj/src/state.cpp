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

#include "mrucc/state.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace mrucc {

namespace {

void check_qubit(const Statevector& s, int q) {
  if (q < 0 || q >= s.n_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " outside register of " +
                            std::to_string(s.n_qubits()));
  }
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("statevector register must be in [1, 26] qubits");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
}

Statevector::Statevector(int n_qubits, std::vector<Complex> amplitudes)
    : Statevector(n_qubits) {
  if (amplitudes.size() != amplitudes_.size()) {
    throw std::invalid_argument("amplitude count does not match 2^n");
  }
  amplitudes_ = std::move(amplitudes);
}

double Statevector::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (Complex& a : amplitudes_) a /= n;
}

double Statevector::weight_outside_sector(int weight) const {
  double s = 0.0;
  for (std::uint64_t j = 0; j < amplitudes_.size(); ++j) {
    if (std::popcount(j) != weight) s += std::norm(amplitudes_[j]);
  }
  return s;
}

Complex inner_product(const Statevector& bra, const Statevector& ket) {
  if (bra.n_qubits() != ket.n_qubits()) {
    throw std::invalid_argument("mismatched register sizes");
  }
  Complex s{};
  for (std::uint64_t j = 0; j < bra.dimension(); ++j) s += std::conj(bra[j]) * ket[j];
  return s;
}

Statevector hf_state(int n_qubits, const std::vector<int>& occupied) {
  Statevector s(n_qubits);
  std::uint64_t index = 0;
  for (int q : occupied) {
    if (q < 0 || q >= n_qubits) throw std::out_of_range("occupied qubit out of range");
    index |= std::uint64_t{1} << q;
  }
  s[index] = 1.0;
  return s;
}

namespace {

template <typename Kernel>
void for_each_pnc_pair(Statevector& state, int qa, int qb, Kernel&& kernel) {
  check_qubit(state, qa);
  check_qubit(state, qb);
  if (qa == qb) throw std::invalid_argument("PNC gate needs two distinct qubits");
  const std::uint64_t ma = std::uint64_t{1} << qa;
  const std::uint64_t mb = std::uint64_t{1} << qb;
  auto amps = state.amplitudes();
  for (std::uint64_t j = 0; j < amps.size(); ++j) {
    // j holds |01> (qa clear, qb set); its partner holds |10>.
    if ((j & ma) == 0 && (j & mb) != 0) kernel(amps[j], amps[j ^ ma ^ mb]);
  }
}

}  // namespace

void apply_pnc(Statevector& state, int qa, int qb, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for_each_pnc_pair(state, qa, qb, [c, s](Complex& a01, Complex& a10) {
    const Complex x = a01;
    const Complex y = a10;
    a01 = c * x - s * y;
    a10 = s * x + c * y;
  });
}

void apply_pnc_derivative(Statevector& state, int qa, int qb, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::uint64_t ma = std::uint64_t{1} << qa;
  const std::uint64_t mb = std::uint64_t{1} << qb;
  auto amps = state.amplitudes();
  // |00> and |11> are constant under the rotation, so their derivative is 0.
  for (std::uint64_t j = 0; j < amps.size(); ++j) {
    if (((j & ma) != 0) == ((j & mb) != 0)) amps[j] = 0.0;
  }
  for_each_pnc_pair(state, qa, qb, [c, s](Complex& a01, Complex& a10) {
    const Complex x = a01;
    const Complex y = a10;
    a01 = -s * x - c * y;
    a10 = c * x - s * y;
  });
}

void apply_pauli_sum(const PauliSum& op, std::span<const Complex> in,
                     std::span<Complex> out) {
  const std::uint64_t dim = std::uint64_t{1} << op.n_qubits();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("operator and state register sizes differ");
  }
  std::fill(out.begin(), out.end(), Complex{});
  for (const auto& [label, c] : op.terms()) {
    const Complex base = c * i_pow(label.y_count());
    const std::uint64_t x = label.x;
    const std::uint64_t z = label.z;
    for (std::uint64_t j = 0; j < dim; ++j) {
      const Complex v = in[j];
      if (v == Complex{}) continue;
      out[j ^ x] += (std::popcount(j & z) & 1) ? -base * v : base * v;
    }
  }
}

Statevector apply_pauli_sum(const PauliSum& op, const Statevector& state) {
  if (op.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("operator and state register sizes differ");
  }
  Statevector out(state.n_qubits());
  apply_pauli_sum(op, state.amplitudes(), out.amplitudes());
  return out;
}

Complex expectation_complex(const Statevector& state, const PauliSum& op) {
  if (op.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("operator and state register sizes differ");
  }
  Complex total{};
  const auto amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  for (const auto& [label, c] : op.terms()) {
    // <psi|P|psi> = sum_j conj(psi[j^x]) i^{|x&z|} (-1)^{|j&z|} psi[j]
    Complex partial{};
    for (std::uint64_t j = 0; j < dim; ++j) {
      const Complex v = amps[j];
      if (v == Complex{}) continue;
      const Complex w = std::conj(amps[j ^ label.x]) * v;
      partial += (std::popcount(j & label.z) & 1) ? -w : w;
    }
    total += c * i_pow(label.y_count()) * partial;
  }
  return total;
}

double expectation(const Statevector& state, const PauliSum& op) {
  if (!is_hermitian(op, 1e-10)) {
    throw std::invalid_argument("expectation requires a Hermitian operator");
  }
  const Complex e = expectation_complex(state, op);
  if (std::abs(e.imag()) >= 1e-9) {
    throw std::runtime_error("expectation value has imaginary part " +
                             std::to_string(e.imag()));
  }
  return e.real();
}

Statevector apply_exponential(const Statevector& state, const PauliSum& gen, double tol,
                              int max_terms_per_step) {
  if (gen.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("generator and state register sizes differ");
  }
  if (!is_anti_hermitian(gen, 1e-10)) {
    throw std::invalid_argument("exponential generator must be anti-Hermitian");
  }
  const double norm_bound = gen.one_norm();
  if (norm_bound == 0.0) return state;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm_bound)));
  const double step_tol = tol / steps;
  const PauliSum scaled = gen * Complex{1.0 / steps, 0.0};

  Statevector result = state;
  Statevector term(state.n_qubits());
  Statevector next(state.n_qubits());
  const double input_norm = state.norm();
  for (int s = 0; s < steps; ++s) {
    term = result;
    bool converged = false;
    for (int k = 1; k <= max_terms_per_step; ++k) {
      apply_pauli_sum(scaled, term.amplitudes(), next.amplitudes());
      const double inv_k = 1.0 / k;
      auto nt = next.amplitudes();
      auto rt = result.amplitudes();
      double term_norm2 = 0.0;
      for (std::size_t j = 0; j < nt.size(); ++j) {
        nt[j] *= inv_k;
        rt[j] += nt[j];
        term_norm2 += std::norm(nt[j]);
      }
      std::swap(term, next);
      if (std::sqrt(term_norm2) < step_tol * std::max(1.0, input_norm)) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("Taylor series for the exponential did not converge");
    }
  }
  if (std::abs(result.norm() - input_norm) > 1e-9 * std::max(1.0, input_norm)) {
    throw ConvergenceError("exponential lost unitarity beyond 1e-9");
  }
  return result;
}

}  // namespace mrucc
