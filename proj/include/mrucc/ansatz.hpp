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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mrucc/state.hpp"

namespace mrucc {

class ScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// PNC gate placement; the gate rotates |b_first b_second> = |01> into |10>.
struct QubitPair {
  int first = 0;
  int second = 1;

  friend bool operator==(const QubitPair&, const QubitPair&) = default;
};

/**
 * @brief Layer plan for the PNC circuit.
 *
 * `sweeps` holds qubit distances in application order: 1 is an adjacent
 * sweep (0,1),(1,2),..., 2 a next-nearest sweep (0,2),(1,3),..., and so on.
 */
struct Schedule {
  std::vector<int> sweeps;
  std::optional<int> budget;
};

/**
 * Grammar (whitespace ignored):
 *
 *     schedule := sequence [ ';' 'budget' '=' INT ]
 *     sequence := item { ',' item }
 *     item     := ( kind | '(' sequence ')' ) [ 'x' INT ]
 *     kind     := 'adjacent' | 'next_nearest' | 'range' INT
 *
 * e.g. `(adjacent,next_nearest)x3; budget=54`.
 */
Schedule parse_schedule(std::string_view text);
std::string to_string(const Schedule& schedule);

/// Ordered PNC gate placements with one parameter each.
struct AnsatzLayout {
  int n_qubits = 0;
  std::vector<QubitPair> gates;
  std::string schedule_descriptor;

  std::size_t parameter_count() const { return gates.size(); }

  /// Gates of `a` followed by gates of `b`.
  static AnsatzLayout concatenate(const AnsatzLayout& a, const AnsatzLayout& b);
  /// Same gates in reverse order (pair with negated, reversed angles to undo).
  AnsatzLayout reversed() const;
};

/// Expands the sweeps in order and truncates at the budget, if any.
AnsatzLayout build_layout(int n_qubits, const Schedule& schedule);
AnsatzLayout build_layout(int n_qubits, std::string_view schedule_text);

/// Applies the gates in layout order to a copy of `reference`.
Statevector prepare_state(const AnsatzLayout& layout, const std::vector<double>& theta,
                          const Statevector& reference);

/// Each PNC gate decomposes into two CNOTs.
inline constexpr int kCnotsPerPncGate = 2;
std::size_t cnot_count(const AnsatzLayout& layout);

/// Default amplitude cutoff for counting determinants.
inline constexpr double kDeterminantThreshold = 1e-8;

/// Number of basis states with |amplitude| > threshold.
std::size_t count_determinants(const Statevector& state,
                               double threshold = kDeterminantThreshold);

}  // namespace mrucc
