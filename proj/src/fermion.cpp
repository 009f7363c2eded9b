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

#include "mrucc/fermion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mrucc {

FermionSum::FermionSum(int n_spin_orbitals) : n_(n_spin_orbitals) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw std::invalid_argument("fermion register size must be in [1, 64]");
  }
}

void FermionSum::add(Complex coefficient, std::vector<LadderOp> factors) {
  for (const LadderOp& op : factors) {
    if (op.mode < 0 || op.mode >= n_) {
      throw std::out_of_range("ladder operator mode " + std::to_string(op.mode) +
                              " outside register of " + std::to_string(n_));
    }
  }
  terms_.push_back({coefficient, std::move(factors)});
}

FermionSum FermionSum::adjoint() const {
  FermionSum out(n_);
  for (const FermionTerm& t : terms_) {
    std::vector<LadderOp> f(t.factors.rbegin(), t.factors.rend());
    for (LadderOp& op : f) op.creation = !op.creation;
    out.terms_.push_back({std::conj(t.coefficient), std::move(f)});
  }
  return out;
}

FermionSum& FermionSum::operator+=(const FermionSum& other) {
  if (other.n_ != n_) throw std::invalid_argument("mismatched fermion register sizes");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionSum& FermionSum::operator-=(const FermionSum& other) {
  if (other.n_ != n_) throw std::invalid_argument("mismatched fermion register sizes");
  for (const FermionTerm& t : other.terms_) terms_.push_back({-t.coefficient, t.factors});
  return *this;
}

namespace {

using TermList = std::vector<std::pair<PauliLabel, Complex>>;

// The two Pauli terms of a single ladder operator under JW.
TermList ladder_terms(int n, const LadderOp& op) {
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t tail = bit - 1;  // Z string on qubits below the mode
  const PauliLabel x_label{bit, tail, n};
  const PauliLabel y_label{bit, tail | bit, n};
  const Complex y_coef = op.creation ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
  return {{x_label, Complex{0.5, 0.0}}, {y_label, y_coef}};
}

}  // namespace

PauliSum jordan_wigner(const FermionSum& f, double threshold) {
  const int n = f.n_spin_orbitals();
  PauliSum out(n);
  TermList current;
  TermList next;
  for (const FermionTerm& term : f.terms()) {
    current.assign(1, {PauliLabel{0, 0, n}, term.coefficient});
    for (const LadderOp& op : term.factors) {
      const TermList factor = ladder_terms(n, op);
      next.clear();
      for (const auto& [la, ca] : current) {
        for (const auto& [lb, cb] : factor) {
          const LabelProduct p = label_mul(la, lb);
          next.emplace_back(p.label, ca * cb * p.phase_factor());
        }
      }
      // Merge duplicates so long products stay small.
      std::sort(next.begin(), next.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      current.clear();
      for (const auto& kv : next) {
        if (!current.empty() && current.back().first == kv.first) {
          current.back().second += kv.second;
        } else {
          current.push_back(kv);
        }
      }
    }
    for (const auto& [label, c] : current) out.add(label, c);
  }
  out.prune(threshold);
  return out;
}

FermionSum build_hamiltonian(const SpinIntegrals& spin) {
  const int n = spin.n_spin_orbitals;
  const auto nn = static_cast<std::size_t>(n);
  if (n < 1 || spin.one_body.size() != nn * nn ||
      spin.two_body.size() != nn * nn * nn * nn) {
    throw std::invalid_argument("spin integrals are inconsistent with the register size");
  }
  FermionSum h(n);
  if (spin.e_core != 0.0) h.add(spin.e_core, {});
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double v = spin.one(p, q);
      if (v != 0.0) h.add(v, {cre(p), ann(q)});
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          const double v = spin.two(p, q, r, s);
          if (v != 0.0) h.add(0.5 * v, {cre(p), cre(q), ann(s), ann(r)});
        }
      }
    }
  }
  return h;
}

FermionSum build_hamiltonian(const MolecularSystem& sys, SpinOrdering ordering) {
  return build_hamiltonian(spin_expand(sys, ordering));
}

PauliSum qubit_hamiltonian(const SpinIntegrals& spin) {
  return jordan_wigner(build_hamiltonian(spin));
}

PauliSum number_operator(int n_qubits) {
  FermionSum f(n_qubits);
  for (int p = 0; p < n_qubits; ++p) f.add(1.0, {cre(p), ann(p)});
  return jordan_wigner(f);
}

std::string ClusterGenerator::describe() const {
  std::ostringstream os;
  os << (kind == ExcitationKind::kSingle ? "S" : "D") << '(';
  for (std::size_t k = 0; k < holes.size(); ++k) os << (k ? "," : "") << holes[k];
  os << "->";
  for (std::size_t k = 0; k < particles.size(); ++k) os << (k ? "," : "") << particles[k];
  os << ')';
  return os.str();
}

std::size_t ClusterPool::singles() const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [](const auto& g) {
        return g.kind == ExcitationKind::kSingle;
      }));
}

std::size_t ClusterPool::doubles() const { return size() - singles(); }

PauliSum ClusterPool::combine(const std::vector<double>& amplitudes) const {
  if (amplitudes.size() != generators.size()) {
    throw std::invalid_argument("amplitude vector does not match the pool size");
  }
  PauliSum out(n_spin_orbitals);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (amplitudes[k] == 0.0) continue;
    for (const auto& [label, c] : generators[k].pauli_form.terms()) {
      out.add(label, amplitudes[k] * c);
    }
  }
  out.prune(kDefaultTruncation);
  return out;
}

FermionSum excitation_operator(int n_spin_orbitals, const ClusterGenerator& gen) {
  FermionSum t(n_spin_orbitals);
  if (gen.kind == ExcitationKind::kSingle) {
    t.add(1.0, {cre(gen.particles[0]), ann(gen.holes[0])});
  } else {
    t.add(1.0, {cre(gen.particles[0]), cre(gen.particles[1]), ann(gen.holes[1]),
                ann(gen.holes[0])});
  }
  return t;
}

ClusterPool build_uccsd_pool(int n_spin_orbitals, const std::vector<int>& occupied,
                             SpinOrdering ordering) {
  const int n = n_spin_orbitals;
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("spin-orbital count must be even and >= 2");
  }
  std::set<int> occ(occupied.begin(), occupied.end());
  if (occ.size() != occupied.size()) {
    throw std::invalid_argument("occupied set contains duplicates");
  }
  for (int i : occ) {
    if (i < 0 || i >= n) throw std::out_of_range("occupied index out of range");
  }
  std::vector<int> holes(occ.begin(), occ.end());
  std::vector<int> particles;
  for (int p = 0; p < n; ++p) {
    if (!occ.contains(p)) particles.push_back(p);
  }
  if (holes.empty() || particles.empty()) {
    throw std::invalid_argument("UCCSD pool needs non-empty particle and hole sets");
  }
  const int n_spatial = n / 2;
  auto sz = [&](int q) { return is_beta(q, n_spatial, ordering) ? -1 : 1; };

  ClusterPool pool;
  pool.n_spin_orbitals = n;
  auto push = [&](ClusterGenerator g) {
    g.id = static_cast<int>(pool.generators.size());
    const FermionSum t = excitation_operator(n, g);
    FermionSum a = t;
    a -= t.adjoint();
    g.pauli_form = jordan_wigner(a);
    pool.generators.push_back(std::move(g));
  };

  for (int i : holes) {
    for (int m : particles) {
      if (sz(i) != sz(m)) continue;
      push({0, ExcitationKind::kSingle, {m}, {i}, PauliSum(n)});
    }
  }
  for (std::size_t a = 0; a < holes.size(); ++a) {
    for (std::size_t b = a + 1; b < holes.size(); ++b) {
      const int i = holes[a], j = holes[b];
      for (std::size_t c = 0; c < particles.size(); ++c) {
        for (std::size_t d = c + 1; d < particles.size(); ++d) {
          const int m = particles[c], nn = particles[d];
          if (sz(m) + sz(nn) != sz(i) + sz(j)) continue;
          push({0, ExcitationKind::kDouble, {m, nn}, {i, j}, PauliSum(n)});
        }
      }
    }
  }
  return pool;
}

}  // namespace mrucc
