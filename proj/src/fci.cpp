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

#include "mrucc/fci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mrucc/eigensolver.hpp"

namespace mrucc {

Statevector LinearOperator::operator()(const Statevector& state) const {
  if (state.n_qubits() != n_qubits()) {
    throw std::invalid_argument("operator and state register sizes differ");
  }
  Statevector out(state.n_qubits());
  apply(state.amplitudes(), out.amplitudes());
  return out;
}

double LinearOperator::expectation(const Statevector& state) const {
  const Statevector h = (*this)(state);
  return inner_product(state, h).real();
}

std::uint64_t sector_dimension(int n_qubits, int n_electrons) {
  if (n_qubits < 0 || n_electrons < 0 || n_electrons > n_qubits || n_qubits > 64) {
    throw std::invalid_argument("invalid sector (" + std::to_string(n_qubits) + ", " +
                                std::to_string(n_electrons) + ")");
  }
  std::uint64_t c = 1;
  const int k = std::min(n_electrons, n_qubits - n_electrons);
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<std::uint64_t>(n_qubits - k + i) / static_cast<std::uint64_t>(i);
  }
  return c;
}

SectorBasis::SectorBasis(int n_qubits, int n_electrons)
    : n_qubits_(n_qubits), n_electrons_(n_electrons) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("sector register must be in [1, 26] qubits");
  }
  const std::uint64_t dim = sector_dimension(n_qubits, n_electrons);
  states_.reserve(dim);
  lookup_.assign(std::size_t{1} << n_qubits, -1);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n_qubits); ++j) {
    if (std::popcount(j) == n_electrons) {
      lookup_[j] = static_cast<std::int32_t>(states_.size());
      states_.push_back(j);
    }
  }
}

std::int64_t SectorBasis::position(std::uint64_t state) const {
  if (state >= lookup_.size()) return -1;
  return lookup_[state];
}

namespace {

// Column-by-column action of the operator on sector basis states.
std::vector<Eigen::Triplet<Complex>> sector_triplets(const PauliSum& op,
                                                     const SectorBasis& basis,
                                                     double leak_tol) {
  if (op.n_qubits() != basis.n_qubits()) {
    throw std::invalid_argument("operator and sector register sizes differ");
  }
  std::vector<std::pair<PauliLabel, Complex>> terms;
  terms.reserve(op.size());
  for (const auto& [label, c] : op.terms()) {
    terms.emplace_back(label, c * i_pow(label.y_count()));
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  std::vector<Complex> leak_column;
  std::vector<std::uint64_t> leak_rows;
  const auto& states = basis.states();
  for (std::size_t col = 0; col < states.size(); ++col) {
    const std::uint64_t b = states[col];
    leak_rows.clear();
    leak_column.clear();
    for (const auto& [label, base] : terms) {
      const std::uint64_t target = b ^ label.x;
      const Complex v = (std::popcount(b & label.z) & 1) ? -base : base;
      const std::int64_t row = basis.position(target);
      if (row >= 0) {
        triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
      } else {
        auto it = std::find(leak_rows.begin(), leak_rows.end(), target);
        if (it == leak_rows.end()) {
          leak_rows.push_back(target);
          leak_column.push_back(v);
        } else {
          leak_column[static_cast<std::size_t>(it - leak_rows.begin())] += v;
        }
      }
    }
    for (const Complex& v : leak_column) {
      if (std::abs(v) > leak_tol) {
        throw SectorLeakError("operator leaks out of the " +
                              std::to_string(basis.n_electrons()) +
                              "-particle sector (element " + std::to_string(std::abs(v)) +
                              ")");
      }
    }
  }
  return triplets;
}

}  // namespace

SectorOperator::SectorOperator(const PauliSum& op, const SectorBasis& basis,
                               double leak_tol)
    : basis_(basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const auto triplets = sector_triplets(op, basis, leak_tol);
  matrix_.resize(dim, dim);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.prune(Complex{}, 0.0);
  matrix_.makeCompressed();
}

void SectorOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t full = std::size_t{1} << basis_.n_qubits();
  if (in.size() != full || out.size() != full) {
    throw std::invalid_argument("operator and state register sizes differ");
  }
  const auto& states = basis_.states();
  std::fill(out.begin(), out.end(), Complex{});
  const auto* outer = matrix_.outerIndexPtr();
  const auto* inner = matrix_.innerIndexPtr();
  const auto* values = matrix_.valuePtr();
  for (Eigen::Index row = 0; row < matrix_.rows(); ++row) {
    Complex acc{};
    for (auto k = outer[row]; k < outer[row + 1]; ++k) {
      acc += values[k] * in[states[static_cast<std::size_t>(inner[k])]];
    }
    out[states[static_cast<std::size_t>(row)]] = acc;
  }
}

Eigen::MatrixXd build_sector_matrix(const PauliSum& hamiltonian, const SectorBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : sector_triplets(hamiltonian, basis, 1e-10)) {
    m(t.row(), t.col()) += t.value();
  }
  if (m.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("sector matrix is not real; Hamiltonian must be real");
  }
  Eigen::MatrixXd real = m.real();
  if ((real - real.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("sector matrix is not symmetric within 1e-10");
  }
  return real;
}

RealSparse real_sector_matrix(const PauliSum& op, const SectorBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<double>> real;
  Eigen::SparseMatrix<Complex, Eigen::RowMajor> m(dim, dim);
  const auto triplets = sector_triplets(op, basis, 1e-10);
  m.setFromTriplets(triplets.begin(), triplets.end());
  for (Eigen::Index row = 0; row < m.outerSize(); ++row) {
    for (decltype(m)::InnerIterator it(m, row); it; ++it) {
      if (std::abs(it.value().imag()) > 1e-12) {
        throw std::invalid_argument("sector matrix has imaginary elements above 1e-12");
      }
      if (it.value().real() != 0.0) real.emplace_back(it.row(), it.col(), it.value().real());
    }
  }
  RealSparse out(dim, dim);
  out.setFromTriplets(real.begin(), real.end());
  out.makeCompressed();
  return out;
}

Eigen::VectorXd gather_real(const Statevector& state, const SectorBasis& basis) {
  if (state.n_qubits() != basis.n_qubits()) {
    throw std::invalid_argument("state and sector register sizes differ");
  }
  if (state.weight_outside_sector(basis.n_electrons()) > 1e-12) {
    throw SectorLeakError("state has weight outside the " +
                          std::to_string(basis.n_electrons()) + "-particle sector");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Complex z = state[basis.states()[a]];
    if (std::abs(z.imag()) > 1e-12) {
      throw std::invalid_argument("state has imaginary amplitudes above 1e-12");
    }
    v(static_cast<Eigen::Index>(a)) = z.real();
  }
  return v;
}

Statevector scatter(const Eigen::VectorXd& amplitudes, const SectorBasis& basis) {
  if (amplitudes.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("sector vector length differs from the basis size");
  }
  Statevector s(basis.n_qubits());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    s[basis.states()[a]] = amplitudes(static_cast<Eigen::Index>(a));
  }
  return s;
}

Eigen::VectorXd sector_exponential(const RealSparse& a, const Eigen::VectorXd& v, double tol,
                                   int max_terms_per_step) {
  if (a.rows() != v.size() || a.cols() != v.size()) {
    throw std::invalid_argument("generator and vector sizes differ");
  }
  Eigen::VectorXd colsum = Eigen::VectorXd::Zero(a.cols());
  for (Eigen::Index row = 0; row < a.outerSize(); ++row) {
    for (RealSparse::InnerIterator it(a, row); it; ++it) colsum(it.col()) += std::abs(it.value());
  }
  const double norm_bound = a.cols() > 0 ? colsum.maxCoeff() : 0.0;
  if (norm_bound == 0.0) return v;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm_bound)));
  const double step_tol = tol / steps * std::max(1.0, v.norm());
  const double scale = 1.0 / steps;

  Eigen::VectorXd result = v;
  Eigen::VectorXd term(v.size());
  for (int s = 0; s < steps; ++s) {
    term = result;
    bool converged = false;
    for (int k = 1; k <= max_terms_per_step; ++k) {
      term = (scale / k) * (a * term);
      result += term;
      if (term.norm() < step_tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("Taylor series for the sector exponential did not converge");
    }
  }
  if (std::abs(result.norm() - v.norm()) > 1e-9 * std::max(1.0, v.norm())) {
    throw ConvergenceError("sector exponential lost unitarity beyond 1e-9");
  }
  return result;
}

Statevector FciResult::full_state() const {
  Statevector s(basis.n_qubits());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    s[basis.states()[a]] = vector(static_cast<Eigen::Index>(a));
  }
  return s;
}

FciResult fci_ground_energy(const PauliSum& hamiltonian, int n_electrons,
                            std::uint64_t dense_cap) {
  SectorBasis basis(hamiltonian.n_qubits(), n_electrons);
  if (basis.size() > dense_cap) {
    throw std::length_error("sector of dimension " + std::to_string(basis.size()) +
                            " exceeds the dense FCI cap of " + std::to_string(dense_cap));
  }
  const Eigen::MatrixXd m = build_sector_matrix(hamiltonian, basis);
  const LowestEigenpair pair = lowest_eigenpair(m);
  FciResult out{pair.value, pair.vector, 0.0, std::move(basis)};
  out.residual = (m * out.vector - out.energy * out.vector).norm();
  if (out.residual >= 1e-8) {
    throw std::runtime_error("FCI eigenpair residual " + std::to_string(out.residual) +
                             " above 1e-8");
  }
  return out;
}

}  // namespace mrucc
