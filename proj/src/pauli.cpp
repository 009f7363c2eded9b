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

#include "mrucc/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mrucc {

namespace {

void check_register(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must be in [1, 64], got " +
                                std::to_string(n_qubits));
  }
}

void check_same_register(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("mismatched register sizes: " +
                                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex LabelProduct::phase_factor() const { return i_pow(phase); }

char PauliLabel::at(int qubit) const {
  const bool xb = (x >> qubit) & 1u;
  const bool zb = (z >> qubit) & 1u;
  if (xb) return zb ? 'Y' : 'X';
  return zb ? 'Z' : 'I';
}

PauliLabel PauliLabel::from_string(std::string_view text) {
  const int n = static_cast<int>(text.size());
  check_register(n);
  PauliLabel p;
  p.n_qubits = n;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli character '" +
                                    std::string(1, text[q]) + "'");
    }
  }
  return p;
}

std::string PauliLabel::to_string() const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) s[q] = at(q);
  return s;
}

PauliLabel PauliLabel::single(int n_qubits, int qubit, char op) {
  check_register(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit index out of range");
  }
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  s[qubit] = op;
  return from_string(s);
}

LabelProduct label_mul(const PauliLabel& a, const PauliLabel& b) {
  check_same_register(a.n_qubits, b.n_qubits);
  LabelProduct out;
  out.label = {a.x ^ b.x, a.z ^ b.z, a.n_qubits};
  // i^{|xa za|} X^xa Z^za · i^{|xb zb|} X^xb Z^zb, commuting Z^za past X^xb
  // costs (-1)^{|za xb|}; the result label absorbs i^{|xc zc|}.
  const int k = a.y_count() + b.y_count() + 2 * std::popcount(a.z & b.x) -
                out.label.y_count();
  out.phase = ((k % 4) + 4) % 4;
  return out;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
}

PauliSum::PauliSum(int n_qubits,
                   std::initializer_list<std::pair<std::string_view, Complex>> terms)
    : PauliSum(n_qubits) {
  for (const auto& [label, c] : terms) add(label, c);
}

PauliSum PauliSum::identity(int n_qubits, Complex coefficient) {
  PauliSum s(n_qubits);
  s.add(PauliLabel{0, 0, n_qubits}, coefficient);
  return s;
}

void PauliSum::check_label(const PauliLabel& label) const {
  check_same_register(n_qubits_, label.n_qubits);
}

void PauliSum::add(const PauliLabel& label, Complex coefficient) {
  check_label(label);
  terms_[label] += coefficient;
}

void PauliSum::add(std::string_view label, Complex coefficient) {
  add(PauliLabel::from_string(label), coefficient);
}

Complex PauliSum::coefficient(const PauliLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex PauliSum::coefficient(std::string_view label) const {
  return coefficient(PauliLabel::from_string(label));
}

std::vector<std::pair<PauliLabel, Complex>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliLabel, Complex>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& [label, c] : terms_) s += std::abs(c);
  return s;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  out.terms_.reserve(terms_.size());
  for (const auto& [label, c] : terms_) out.terms_.emplace(label, std::conj(c));
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_register(n_qubits_, other.n_qubits_);
  for (const auto& [label, c] : other.terms_) terms_[label] += c;
  prune(kDefaultTruncation);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_register(n_qubits_, other.n_qubits_);
  for (const auto& [label, c] : other.terms_) terms_[label] -= c;
  prune(kDefaultTruncation);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [label, c] : terms_) c *= scale;
  prune(kDefaultTruncation);
  return *this;
}

void PauliSum::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) {
    return std::abs(kv.second) < threshold;
  });
}

PauliSum sum_mul(const PauliSum& a, const PauliSum& b, double threshold) {
  check_same_register(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      const LabelProduct p = label_mul(la, lb);
      out.add(p.label, ca * cb * p.phase_factor());
    }
  }
  out.prune(threshold);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b, double threshold) {
  check_same_register(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      if (labels_commute(la, lb)) continue;
      const LabelProduct p = label_mul(la, lb);
      out.add(p.label, 2.0 * ca * cb * p.phase_factor());
    }
  }
  out.prune(threshold);
  return out;
}

bool is_hermitian(const PauliSum& a, double tol) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [tol](const auto& kv) { return std::abs(kv.second.imag()) <= tol; });
}

bool is_anti_hermitian(const PauliSum& a, double tol) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [tol](const auto& kv) { return std::abs(kv.second.real()) <= tol; });
}

PauliSum truncate(const PauliSum& a, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  PauliSum out = a;
  out.prune(threshold);
  return out;
}

Eigen::MatrixXcd to_matrix(const PauliSum& a, int qubit_cap) {
  const int n = a.n_qubits();
  if (n > qubit_cap) {
    throw std::length_error("register of " + std::to_string(n) +
                            " qubits exceeds dense cap of " +
                            std::to_string(qubit_cap));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& [label, c] : a.terms()) {
    const Complex base = c * i_pow(label.y_count());
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & label.z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ label.x), static_cast<Eigen::Index>(j)) +=
          sign * base;
    }
  }
  return m;
}

void write_text(std::ostream& os, const PauliSum& a) {
  const auto old_precision = os.precision(17);
  for (const auto& [label, c] : a.sorted_terms()) {
    os << c.real() << ' ' << c.imag() << ' ' << label.to_string() << '\n';
  }
  os.precision(old_precision);
}

std::string to_text(const PauliSum& a) {
  std::ostringstream os;
  write_text(os, a);
  return os.str();
}

PauliSum parse_pauli_text(std::string_view text, int n_qubits) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::pair<PauliLabel, Complex>> parsed;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    std::string label;
    if (!(ls >> re >> im >> label)) {
      throw std::invalid_argument("malformed Pauli term on line " +
                                  std::to_string(line_no));
    }
    parsed.emplace_back(PauliLabel::from_string(label), Complex{re, im});
  }
  if (parsed.empty()) {
    if (n_qubits <= 0) {
      throw std::invalid_argument("empty Pauli text needs an explicit register size");
    }
    return PauliSum(n_qubits);
  }
  PauliSum out(n_qubits > 0 ? n_qubits : parsed.front().first.n_qubits);
  for (const auto& [label, c] : parsed) out.add(label, c);
  return out;
}

}  // namespace mrucc
