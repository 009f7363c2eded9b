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

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mrucc {

using Complex = std::complex<double>;

/// Largest register a PauliLabel can address (one bit per qubit per mask).
inline constexpr int kMaxQubits = 64;

/// Coefficients smaller than this are dropped after every sum-level
/// operation unless a caller asks otherwise.
inline constexpr double kDefaultTruncation = 1e-12;

/// Largest register `to_matrix` realizes by default.
inline constexpr int kDenseQubitCap = 16;

/**
 * @brief Phase-free n-qubit Pauli string in symplectic form.
 *
 * Qubit q carries (x bit, z bit): (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.
 * The operator equals i^{popcount(x & z)} X^x Z^z, so acting on the basis
 * state |j> gives i^{|x&z|} (-1)^{|j&z|} |j ^ x>.
 */
struct PauliLabel {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int n_qubits = 1;

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;

  bool is_identity() const { return x == 0 && z == 0; }
  int y_count() const { return std::popcount(x & z); }
  int weight() const { return std::popcount(x | z); }

  /// Character ('I','X','Y','Z') for one qubit.
  char at(int qubit) const;

  /// Parses e.g. "XIZY", qubit 0 leftmost.
  static PauliLabel from_string(std::string_view text);
  std::string to_string() const;

  /// Single-qubit label on an n-qubit register.
  static PauliLabel single(int n_qubits, int qubit, char op);
};

struct PauliLabelHash {
  std::size_t operator()(const PauliLabel& p) const noexcept {
    std::uint64_t h = p.x * 0x9E3779B97F4A7C15ull;
    h ^= (p.z + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Product of two labels: matrix(a)·matrix(b) = i^phase · matrix(label).
struct LabelProduct {
  PauliLabel label;
  int phase = 0;  // power of i, in [0, 4)

  Complex phase_factor() const;
};

/// Throws std::invalid_argument on mismatched register sizes.
LabelProduct label_mul(const PauliLabel& a, const PauliLabel& b);

/// True iff the two labels commute.
inline bool labels_commute(const PauliLabel& a, const PauliLabel& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

/// i^k for k in any integer range.
Complex i_pow(int k);

/**
 * @brief Sparse linear combination of Pauli labels on a fixed register.
 *
 * Values are treated as immutable by the free functions below; every
 * arithmetic result is truncated at kDefaultTruncation.
 */
class PauliSum {
 public:
  using Map = std::unordered_map<PauliLabel, Complex, PauliLabelHash>;

  explicit PauliSum(int n_qubits = 1);
  PauliSum(int n_qubits, std::initializer_list<std::pair<std::string_view, Complex>> terms);

  static PauliSum identity(int n_qubits, Complex coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  /// Accumulates into an existing label (no truncation).
  void add(const PauliLabel& label, Complex coefficient);
  void add(std::string_view label, Complex coefficient);

  /// Zero when absent.
  Complex coefficient(const PauliLabel& label) const;
  Complex coefficient(std::string_view label) const;

  /// Terms ordered by label, for deterministic iteration and output.
  std::vector<std::pair<PauliLabel, Complex>> sorted_terms() const;

  /// Sum of |coefficient|; an upper bound on the spectral norm.
  double one_norm() const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }

  /// Drops terms with |coefficient| < threshold in place.
  void prune(double threshold);

 private:
  void check_label(const PauliLabel& label) const;

  int n_qubits_;
  Map terms_;
};

/// Distributes label_mul over all term pairs and merges like labels.
PauliSum sum_mul(const PauliSum& a, const PauliSum& b,
                 double threshold = kDefaultTruncation);

/// ab - ba; only anticommuting label pairs contribute (2·product).
PauliSum commutator(const PauliSum& a, const PauliSum& b,
                    double threshold = kDefaultTruncation);

/// Pauli labels are Hermitian, so this checks that coefficients are real.
bool is_hermitian(const PauliSum& a, double tol = 1e-10);

/// A = -A† for a Pauli sum means every coefficient is imaginary.
bool is_anti_hermitian(const PauliSum& a, double tol = 1e-10);

/// Removes terms with |coefficient| < threshold.
PauliSum truncate(const PauliSum& a, double threshold);

/// Dense 2^n matrix, little-endian (qubit 0 is the least significant bit).
Eigen::MatrixXcd to_matrix(const PauliSum& a, int qubit_cap = kDenseQubitCap);

/// One term per line: `<re> <im> <label>`, labels sorted.
std::string to_text(const PauliSum& a);
void write_text(std::ostream& os, const PauliSum& a);

/// Inverse of to_text. Empty input yields an empty sum on `n_qubits`
/// (required then, since no label fixes the register size).
PauliSum parse_pauli_text(std::string_view text, int n_qubits = 0);

}  // namespace mrucc
