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

#include "mrucc/profiles.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mrucc {

const std::vector<MoleculeProfile>& molecule_profiles() {
  static const std::vector<MoleculeProfile> profiles = {
      {"LiH", 6, 4, "(adjacent,next_nearest)x3; budget=54", 1.59,
       {1.00, 1.59, 2.00, 2.50, 3.00, 3.20}},
      {"H6", 6, 6, "(adjacent,next_nearest)x13; budget=260", 0.86,
       {0.70, 0.86, 1.00, 1.25, 1.50, 1.75, 2.00}},
      {"BeH2", 7, 6, "(adjacent,next_nearest)x8; budget=198", 1.25,
       {1.00, 1.25, 1.50, 2.00, 2.50, 3.00}},
  };
  return profiles;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const MoleculeProfile& find_profile(std::string_view name) {
  for (const auto& p : molecule_profiles()) {
    if (lower(p.name) == lower(name)) return p;
  }
  throw std::invalid_argument("unknown molecule profile '" + std::string(name) +
                              "' (expected LiH, H6 or BeH2)");
}

std::optional<MoleculeProfile> match_profile(int n_spatial, int n_electrons) {
  for (const auto& p : molecule_profiles()) {
    if (p.n_spatial == n_spatial && p.n_electrons == n_electrons) return p;
  }
  return std::nullopt;
}

}  // namespace mrucc
