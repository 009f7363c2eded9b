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

// Dense reference constructions that share no code with the library.

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mrucc/integrals.hpp"

namespace mrucc::testing {

using Cx = std::complex<double>;

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(MRUCC_FIXTURE_DIR) / rel;
}

struct ReferencePoint {
  double r = 0.0;
  std::string file;
  double e_hf = 0.0;
  double e_fci = 0.0;
};

inline std::vector<ReferencePoint> reference_points(const std::string& molecule_dir) {
  std::ifstream in(fixture(molecule_dir + "/reference.json"));
  if (!in) throw std::runtime_error("missing reference.json in " + molecule_dir);
  const auto j = nlohmann::json::parse(in);
  std::vector<ReferencePoint> out;
  for (const auto& p : j.at("points")) {
    out.push_back({p.at("R").get<double>(), p.at("file").get<std::string>(),
                   p.at("e_hf").get<double>(), p.at("e_fci").get<double>()});
  }
  return out;
}

inline Eigen::Matrix2cd single_pauli(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Cx(0, -1), Cx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli character");
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Label string has qubit 0 leftmost; qubit 0 is the least significant bit.
inline Eigen::MatrixXcd pauli_string_matrix(const std::string& label) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : label) m = kron(single_pauli(c), m);
  return m;
}

/// Annihilation operator on mode p: a_p|j> = (-1)^{#occupied below p} |j - 2^p>.
inline Eigen::MatrixXd annihilator(int n_modes, int p) {
  const std::uint64_t dim = 1ull << n_modes;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (!((j >> p) & 1ull)) continue;
    const int below = std::popcount(j & ((1ull << p) - 1));
    a(static_cast<Eigen::Index>(j ^ (1ull << p)), static_cast<Eigen::Index>(j)) =
        (below % 2) ? -1.0 : 1.0;
  }
  return a;
}

/// Applies a string of ladder operators (rightmost first) to determinant j.
/// Returns false when the result vanishes.
inline bool apply_ladder(std::uint64_t& j, double& sign,
                         std::initializer_list<std::pair<int, bool>> ops_left_to_right) {
  std::vector<std::pair<int, bool>> ops(ops_left_to_right);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const auto [p, creation] = *it;
    const bool occ = (j >> p) & 1ull;
    if (occ == creation) return false;
    if (std::popcount(j & ((1ull << p) - 1)) % 2) sign = -sign;
    j ^= 1ull << p;
  }
  return true;
}

/// e_core + sum h_pq a+_p a_q + 1/2 sum <pq|rs> a+_p a+_q a_s a_r.
inline Eigen::MatrixXd dense_hamiltonian(const SpinIntegrals& s) {
  const int n = s.n_spin_orbitals;
  const auto dim = static_cast<Eigen::Index>(1ull << n);
  Eigen::MatrixXd h = s.e_core * Eigen::MatrixXd::Identity(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const double v = s.one(p, q);
        if (v == 0.0) continue;
        std::uint64_t j = col;
        double sign = 1.0;
        if (apply_ladder(j, sign, {{p, true}, {q, false}})) {
          h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col)) += sign * v;
        }
      }
    }
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        for (int r = 0; r < n; ++r) {
          for (int t = 0; t < n; ++t) {
            const double v = s.two(p, q, r, t);
            if (v == 0.0) continue;
            std::uint64_t j = col;
            double sign = 1.0;
            if (apply_ladder(j, sign, {{p, true}, {q, true}, {t, false}, {r, false}})) {
              h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col)) += 0.5 * sign * v;
            }
          }
        }
      }
    }
  }
  return h;
}

/// Givens rotation on qubits (qa, qb) as a dense matrix.
inline Eigen::MatrixXcd dense_pnc(int n_qubits, int qa, int qb, double theta) {
  const auto dim = static_cast<Eigen::Index>(1ull << n_qubits);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(dim, dim);
  const double c = std::cos(theta), s = std::sin(theta);
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
    const bool ba = (j >> qa) & 1ull, bb = (j >> qb) & 1ull;
    if (ba || !bb) continue;  // j holds |qa=0, qb=1>
    const std::uint64_t k = j ^ (1ull << qa) ^ (1ull << qb);
    const auto J = static_cast<Eigen::Index>(j), K = static_cast<Eigen::Index>(k);
    // |qa=0,qb=1> -> c|01> + s|10>, |10> -> -s|01> + c|10> with qa the first label bit.
    g(J, J) = c;
    g(K, J) = s;
    g(J, K) = -s;
    g(K, K) = c;
  }
  return g;
}

inline Eigen::VectorXcd random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(1ull << n_qubits));
  for (auto& x : v) x = Cx(nd(rng), nd(rng));
  return v / v.norm();
}

}  // namespace mrucc::testing
