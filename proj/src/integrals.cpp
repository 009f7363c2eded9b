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

#include "mrucc/integrals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace mrucc {

MolecularSystem MolecularSystem::zeros(int n, int n_electrons, int ms2) {
  MolecularSystem sys;
  sys.n_spatial = n;
  sys.n_electrons = n_electrons;
  sys.ms2 = ms2;
  const auto nn = static_cast<std::size_t>(n);
  sys.h1.assign(nn * nn, 0.0);
  sys.h2.assign(nn * nn * nn * nn, 0.0);
  return sys;
}

void MolecularSystem::set_two_symmetric(int p, int q, int r, int s, double value) {
  for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s},
                            std::array{p, q, s, r}, std::array{q, p, s, r},
                            std::array{r, s, p, q}, std::array{s, r, p, q},
                            std::array{r, s, q, p}, std::array{s, r, q, p}}) {
    two(a, b, c, d) = value;
  }
}

void MolecularSystem::set_one_symmetric(int p, int q, double value) {
  one(p, q) = value;
  one(q, p) = value;
}

double MolecularSystem::one_body_asymmetry() const {
  double worst = 0.0;
  for (int p = 0; p < n_spatial; ++p) {
    for (int q = 0; q < p; ++q) worst = std::max(worst, std::abs(one(p, q) - one(q, p)));
  }
  return worst;
}

namespace {

std::optional<long> header_int(const std::string& header, const std::string& key) {
  const std::regex re("(^|[^A-Z0-9_])" + key + "\\s*=\\s*([-+]?[0-9]+)");
  std::smatch m;
  if (!std::regex_search(header, m, re)) return std::nullopt;
  return std::stol(m[2].str());
}

// Symmetry-equivalent storage slots of one file entry, entry slot first.
std::vector<std::size_t> slot_class(const MolecularSystem& sys, int i, int j, int k,
                                    int l) {
  const auto n = static_cast<std::size_t>(sys.n_spatial);
  std::vector<std::size_t> slots;
  if (k < 0) {
    slots = {static_cast<std::size_t>(i) * n + j, static_cast<std::size_t>(j) * n + i};
  } else {
    auto idx = [n](int a, int b, int c, int d) {
      return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d;
    };
    slots = {idx(i, j, k, l), idx(j, i, k, l), idx(i, j, l, k), idx(j, i, l, k),
             idx(k, l, i, j), idx(l, k, i, j), idx(k, l, j, i), idx(l, k, j, i)};
  }
  std::vector<std::size_t> unique{slots.front()};
  for (std::size_t s : slots) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
  }
  return unique;
}

struct SlotState {
  std::vector<bool> set;
  std::vector<bool> explicit_entry;
};

}  // namespace

MolecularSystem parse_fcidump(std::istream& in, const FcidumpOptions& options,
                              FcidumpParseReport* report) {
  std::string header;
  std::string line;
  bool terminated = false;
  bool started = false;
  while (std::getline(in, line)) {
    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (!started) {
      if (upper.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (upper.find("&FCI") == std::string::npos) {
        throw FcidumpError("FCIDUMP header must start with &FCI");
      }
      started = true;
    }
    const auto end_pos = std::min(upper.find("&END"), upper.find('/'));
    header += ' ' + upper.substr(0, end_pos);
    if (end_pos != std::string::npos || upper.find("$END") != std::string::npos) {
      terminated = true;
      break;
    }
  }
  if (!started) throw FcidumpError("empty FCIDUMP input");
  if (!terminated) throw FcidumpError("FCIDUMP header is not terminated by '/' or &END");

  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb || !nelec) throw FcidumpError("FCIDUMP header lacks NORB or NELEC");
  const long ms2 = header_int(header, "MS2").value_or(0);
  if (*norb < 1 || *nelec < 0 || *nelec > 2 * *norb) {
    throw FcidumpError("FCIDUMP header has inconsistent NORB/NELEC");
  }
  if (std::abs(ms2) > *nelec || ((*nelec + ms2) % 2) != 0) {
    throw FcidumpError("FCIDUMP header has inconsistent MS2");
  }

  MolecularSystem sys = MolecularSystem::zeros(static_cast<int>(*norb),
                                               static_cast<int>(*nelec),
                                               static_cast<int>(ms2));
  const int n = sys.n_spatial;
  SlotState one_state{std::vector<bool>(sys.h1.size()), std::vector<bool>(sys.h1.size())};
  SlotState two_state{std::vector<bool>(sys.h2.size()), std::vector<bool>(sys.h2.size())};
  FcidumpParseReport local;
  bool core_set = false;

  auto store = [&](std::vector<double>& values, SlotState& state,
                   const std::vector<std::size_t>& slots, double v, int line_no) {
    bool conflict = false;
    for (std::size_t s : slots) {
      if (state.set[s] && std::abs(values[s] - v) > kFcidumpConflictTol) conflict = true;
    }
    if (conflict) {
      if (options.strict) {
        throw FcidumpError("conflicting duplicate integral on data line " +
                           std::to_string(line_no));
      }
      ++local.conflicts;
    }
    values[slots.front()] = v;
    state.set[slots.front()] = true;
    state.explicit_entry[slots.front()] = true;
    for (std::size_t k = 1; k < slots.size(); ++k) {
      if (!state.explicit_entry[slots[k]]) {
        values[slots[k]] = v;
        state.set[slots[k]] = true;
      }
    }
  };

  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace_if(line.begin(), line.end(), [](char c) { return c == 'D' || c == 'd'; }, 'E');
    std::istringstream ls(line);
    double value = 0.0;
    long i = 0, j = 0, k = 0, l = 0;
    if (!(ls >> value >> i >> j >> k >> l)) {
      throw FcidumpError("malformed FCIDUMP data line " + std::to_string(line_no));
    }
    for (long idx : {i, j, k, l}) {
      if (idx < 0 || idx > n) {
        throw FcidumpError("orbital index out of range [1, NORB] on data line " +
                           std::to_string(line_no));
      }
    }
    ++local.data_lines;
    const int a = static_cast<int>(i) - 1, b = static_cast<int>(j) - 1;
    const int c = static_cast<int>(k) - 1, d = static_cast<int>(l) - 1;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core_set && std::abs(sys.e_core - value) > kFcidumpConflictTol) {
        if (options.strict) {
          throw FcidumpError("conflicting core energy on data line " +
                             std::to_string(line_no));
        }
        ++local.conflicts;
      }
      sys.e_core = value;
      core_set = true;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      store(sys.h1, one_state, slot_class(sys, a, b, -1, -1), value, line_no);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      store(sys.h2, two_state, slot_class(sys, a, b, c, d), value, line_no);
    } else if (j == 0 && k == 0 && l == 0) {
      // orbital energy record; not part of the Hamiltonian
    } else {
      throw FcidumpError("unrecognized index pattern on data line " +
                         std::to_string(line_no));
    }
  }
  if (report != nullptr) *report = local;
  return sys;
}

MolecularSystem parse_fcidump_text(std::string_view text, const FcidumpOptions& options,
                                   FcidumpParseReport* report) {
  std::istringstream is{std::string(text)};
  return parse_fcidump(is, options, report);
}

MolecularSystem load_fcidump(const std::filesystem::path& path,
                             const FcidumpOptions& options, FcidumpParseReport* report) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open FCIDUMP file " + path.string());
  return parse_fcidump(in, options, report);
}

void write_fcidump(std::ostream& out, const MolecularSystem& sys, double cutoff) {
  const int n = sys.n_spatial;
  out << " &FCI NORB=" << n << ",NELEC=" << sys.n_electrons << ",MS2=" << sys.ms2
      << ",\n &END\n";
  out << std::setprecision(17);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s <= r; ++s) {
          if (p * n + q < r * n + s) continue;
          const double v = sys.two(p, q, r, s);
          if (std::abs(v) > cutoff) {
            out << v << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' ' << s + 1
                << '\n';
          }
        }
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      if (std::abs(sys.one(p, q)) > cutoff) {
        out << sys.one(p, q) << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
      }
    }
  }
  out << sys.e_core << " 0 0 0 0\n";
}

SpinOrdering parse_spin_ordering(std::string_view text) {
  if (text == "interleaved") return SpinOrdering::kInterleaved;
  if (text == "blocked") return SpinOrdering::kBlocked;
  throw std::invalid_argument("unknown spin ordering '" + std::string(text) + "'");
}

std::string_view to_string(SpinOrdering ordering) {
  return ordering == SpinOrdering::kInterleaved ? "interleaved" : "blocked";
}

int spin_orbital_index(int p, bool beta, int n_spatial, SpinOrdering ordering) {
  if (ordering == SpinOrdering::kInterleaved) return 2 * p + (beta ? 1 : 0);
  return p + (beta ? n_spatial : 0);
}

bool is_beta(int q, int n_spatial, SpinOrdering ordering) {
  if (ordering == SpinOrdering::kInterleaved) return (q % 2) == 1;
  return q >= n_spatial;
}

SpinIntegrals spin_expand(const MolecularSystem& sys, SpinOrdering ordering) {
  const int n = sys.n_spatial;
  const int ns = 2 * n;
  SpinIntegrals out;
  out.n_spin_orbitals = ns;
  out.n_electrons = sys.n_electrons;
  out.ms2 = sys.ms2;
  out.e_core = sys.e_core;
  out.ordering = ordering;
  const auto nss = static_cast<std::size_t>(ns);
  out.one_body.assign(nss * nss, 0.0);
  out.two_body.assign(nss * nss * nss * nss, 0.0);

  std::vector<int> spatial(nss);
  std::vector<int> spin(nss);
  for (int p = 0; p < n; ++p) {
    for (int s = 0; s < 2; ++s) {
      const int q = spin_orbital_index(p, s == 1, n, ordering);
      spatial[q] = p;
      spin[q] = s;
    }
  }
  for (int P = 0; P < ns; ++P) {
    for (int Q = 0; Q < ns; ++Q) {
      if (spin[P] == spin[Q]) {
        out.one_body[P * nss + Q] = sys.one(spatial[P], spatial[Q]);
      }
    }
  }
  for (int P = 0; P < ns; ++P) {
    for (int Q = 0; Q < ns; ++Q) {
      for (int R = 0; R < ns; ++R) {
        if (spin[P] != spin[R]) continue;
        for (int S = 0; S < ns; ++S) {
          if (spin[Q] != spin[S]) continue;
          // <PQ|RS> = (pr|qs)
          out.two_body[((P * nss + Q) * nss + R) * nss + S] =
              sys.two(spatial[P], spatial[R], spatial[Q], spatial[S]);
        }
      }
    }
  }
  return out;
}

std::vector<int> default_occupation(int n_spatial, int n_electrons, int ms2,
                                    SpinOrdering ordering) {
  const int n_alpha = (n_electrons + ms2) / 2;
  const int n_beta = (n_electrons - ms2) / 2;
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial || n_beta > n_spatial ||
      n_alpha + n_beta != n_electrons) {
    throw std::invalid_argument("electron count and MS2 do not fit the orbital space");
  }
  std::vector<int> occ;
  for (int p = 0; p < n_alpha; ++p) occ.push_back(spin_orbital_index(p, false, n_spatial, ordering));
  for (int p = 0; p < n_beta; ++p) occ.push_back(spin_orbital_index(p, true, n_spatial, ordering));
  std::sort(occ.begin(), occ.end());
  return occ;
}

std::vector<int> default_occupation(const SpinIntegrals& spin) {
  return default_occupation(spin.n_spin_orbitals / 2, spin.n_electrons, spin.ms2,
                            spin.ordering);
}

double hf_energy(const SpinIntegrals& spin, const std::vector<int>& occupied) {
  if (static_cast<int>(occupied.size()) != spin.n_electrons) {
    throw std::invalid_argument("occupation has " + std::to_string(occupied.size()) +
                                " orbitals but the system has " +
                                std::to_string(spin.n_electrons) + " electrons");
  }
  for (int i : occupied) {
    if (i < 0 || i >= spin.n_spin_orbitals) {
      throw std::out_of_range("occupied spin orbital out of range");
    }
  }
  double e = spin.e_core;
  for (int i : occupied) e += spin.one(i, i);
  double two = 0.0;
  for (int i : occupied) {
    for (int j : occupied) {
      if (i == j) continue;
      two += spin.two(i, j, i, j) - spin.two(i, j, j, i);
    }
  }
  return e + 0.5 * two;
}

}  // namespace mrucc
