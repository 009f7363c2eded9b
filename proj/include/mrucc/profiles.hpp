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
#include <string>
#include <string_view>
#include <vector>

namespace mrucc {

/// Bundled defaults for one molecule in a minimal basis.
struct MoleculeProfile {
  std::string name;
  int n_spatial = 0;
  int n_electrons = 0;
  /// Schedule text including the parameter budget.
  std::string schedule;
  double equilibrium = 0.0;  // angstrom
  std::vector<double> grid;  // angstrom

  int n_qubits() const { return 2 * n_spatial; }
};

const std::vector<MoleculeProfile>& molecule_profiles();

/// Case-insensitive lookup by name ("LiH", "H6", "BeH2"). Throws if unknown.
const MoleculeProfile& find_profile(std::string_view name);

/// Profile whose (orbitals, electrons) match, if any.
std::optional<MoleculeProfile> match_profile(int n_spatial, int n_electrons);

/// Schedule used when no profile applies.
inline constexpr std::string_view kGenericSchedule = "(adjacent,next_nearest)x2";

}  // namespace mrucc
