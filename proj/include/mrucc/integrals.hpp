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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrucc {

/// Raised for malformed or inconsistent FCIDUMP input.
class FcidumpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance used when two file entries map to the same symmetric slot.
inline constexpr double kFcidumpConflictTol = 1e-10;

/**
 * @brief Spatial-orbital integrals as stored in an FCIDUMP.
 *
 * Indices are 0-based after parsing. `h2` is in chemist notation (pq|rs)
 * and is kept densely with its 8-fold permutational symmetry completed.
 */
struct MolecularSystem {
  int n_spatial = 0;
  int n_electrons = 0;
  int ms2 = 0;
  double e_core = 0.0;
  std::vector<double> h1;  // n_spatial^2, row-major
  std::vector<double> h2;  // n_spatial^4, (pq|rs) at ((p*n+q)*n+r)*n+s

  /// Zero-initialized storage for `n` spatial orbitals.
  static MolecularSystem zeros(int n, int n_electrons, int ms2 = 0);

  double& one(int p, int q) { return h1[static_cast<std::size_t>(p * n_spatial + q)]; }
  double one(int p, int q) const { return h1[static_cast<std::size_t>(p * n_spatial + q)]; }
  double& two(int p, int q, int r, int s) { return h2[index4(p, q, r, s)]; }
  double two(int p, int q, int r, int s) const { return h2[index4(p, q, r, s)]; }

  /// Writes `value` into all eight symmetry-equivalent (pq|rs) slots.
  void set_two_symmetric(int p, int q, int r, int s, double value);
  /// Writes h1(p,q) and h1(q,p).
  void set_one_symmetric(int p, int q, double value);

  /// Largest |h1(p,q) - h1(q,p)|.
  double one_body_asymmetry() const;

 private:
  std::size_t index4(int p, int q, int r, int s) const {
    const auto n = static_cast<std::size_t>(n_spatial);
    return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
  }
};

struct FcidumpOptions {
  /// Strict parsing rejects entries that contradict an earlier entry's
  /// symmetry image. Lenient parsing keeps explicitly written values,
  /// fills only untouched symmetric slots, and counts the conflicts.
  bool strict = true;
};

struct FcidumpParseReport {
  int conflicts = 0;
  int data_lines = 0;
};

MolecularSystem parse_fcidump(std::istream& in, const FcidumpOptions& options = {},
                              FcidumpParseReport* report = nullptr);
MolecularSystem parse_fcidump_text(std::string_view text,
                                   const FcidumpOptions& options = {},
                                   FcidumpParseReport* report = nullptr);
MolecularSystem load_fcidump(const std::filesystem::path& path,
                             const FcidumpOptions& options = {},
                             FcidumpParseReport* report = nullptr);

/// Emits the system as an FCIDUMP (unique 8-fold entries, |v| > cutoff).
void write_fcidump(std::ostream& out, const MolecularSystem& sys, double cutoff = 0.0);

/// Spin-orbital to qubit assignment.
enum class SpinOrdering {
  kInterleaved,  // spatial p -> qubits 2p (alpha), 2p+1 (beta)
  kBlocked,      // spatial p -> qubits p (alpha), n + p (beta)
};

SpinOrdering parse_spin_ordering(std::string_view text);
std::string_view to_string(SpinOrdering ordering);

/// Qubit index of spatial orbital `p` with spin `beta` (false = alpha).
int spin_orbital_index(int p, bool beta, int n_spatial, SpinOrdering ordering);
/// True if spin orbital `q` is a beta orbital.
bool is_beta(int q, int n_spatial, SpinOrdering ordering);

/**
 * @brief Spin-orbital integrals in physicist notation.
 *
 * two(p,q,r,s) = <pq|rs> = (pr|qs) with spin(p)=spin(r), spin(q)=spin(s).
 */
struct SpinIntegrals {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  int ms2 = 0;
  double e_core = 0.0;
  SpinOrdering ordering = SpinOrdering::kInterleaved;
  std::vector<double> one_body;  // n^2
  std::vector<double> two_body;  // n^4

  double one(int p, int q) const {
    return one_body[static_cast<std::size_t>(p * n_spin_orbitals + q)];
  }
  double two(int p, int q, int r, int s) const {
    const auto n = static_cast<std::size_t>(n_spin_orbitals);
    return two_body[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
  }
};

SpinIntegrals spin_expand(const MolecularSystem& sys,
                          SpinOrdering ordering = SpinOrdering::kInterleaved);

/// Lowest (N+ms2)/2 alpha and (N-ms2)/2 beta orbitals, assuming energy-sorted
/// canonical orbitals. Returned sorted ascending.
std::vector<int> default_occupation(int n_spatial, int n_electrons, int ms2,
                                    SpinOrdering ordering);
std::vector<int> default_occupation(const SpinIntegrals& spin);

/// Determinant energy e_core + sum h_ii + 1/2 sum_{i!=j} (<ij|ij> - <ij|ji>).
/// Throws if |occupied| differs from spin.n_electrons.
double hf_energy(const SpinIntegrals& spin, const std::vector<int>& occupied);

}  // namespace mrucc
