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

#include "mrucc/ansatz.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace mrucc {

namespace {

class ScheduleParser {
 public:
  explicit ScheduleParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Schedule parse() {
    Schedule s;
    s.sweeps = sequence();
    if (s.sweeps.empty()) throw ScheduleError("schedule has no sweeps");
    if (consume(';')) {
      expect_word("budget");
      if (!consume('=')) fail("expected '=' after budget");
      const long b = integer();
      if (b < 1) throw ScheduleError("budget must be >= 1");
      s.budget = static_cast<int>(b);
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  std::vector<int> sequence() {
    std::vector<int> out;
    do {
      const auto part = item();
      out.insert(out.end(), part.begin(), part.end());
    } while (consume(','));
    return out;
  }

  std::vector<int> item() {
    std::vector<int> body;
    if (consume('(')) {
      body = sequence();
      if (!consume(')')) fail("expected ')'");
    } else if (try_word("adjacent")) {
      body = {1};
    } else if (try_word("next_nearest")) {
      body = {2};
    } else if (try_word("range")) {
      const long d = integer();
      if (d < 1) throw ScheduleError("range distance must be >= 1");
      body = {static_cast<int>(d)};
    } else {
      fail("expected a sweep kind or '('");
    }
    if (peek() == 'x' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const long reps = integer();
      if (reps < 1) throw ScheduleError("repeat count must be >= 1");
      std::vector<int> repeated;
      for (long r = 0; r < reps; ++r) repeated.insert(repeated.end(), body.begin(), body.end());
      return repeated;
    }
    return body;
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool try_word(std::string_view w) {
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }

  void expect_word(std::string_view w) {
    if (!try_word(w)) fail("expected '" + std::string(w) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ScheduleError("schedule parse error at offset " + std::to_string(pos_) + ": " +
                        what + " in '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string sweep_name(int d) {
  if (d == 1) return "adjacent";
  if (d == 2) return "next_nearest";
  return "range" + std::to_string(d);
}

}  // namespace

Schedule parse_schedule(std::string_view text) { return ScheduleParser(text).parse(); }

std::string to_string(const Schedule& schedule) {
  const auto& s = schedule.sweeps;
  // Shortest period that tiles the whole sequence.
  std::size_t period = s.size();
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (s.size() % p != 0) continue;
    bool tiles = true;
    for (std::size_t i = p; i < s.size() && tiles; ++i) tiles = s[i] == s[i % p];
    if (tiles) {
      period = p;
      break;
    }
  }
  std::ostringstream os;
  const std::size_t reps = period == 0 ? 0 : s.size() / period;
  if (reps > 1 && period > 1) os << '(';
  for (std::size_t k = 0; k < period; ++k) os << (k ? "," : "") << sweep_name(s[k]);
  if (reps > 1) os << (period > 1 ? ")" : "") << 'x' << reps;
  if (schedule.budget) os << "; budget=" << *schedule.budget;
  return os.str();
}

AnsatzLayout AnsatzLayout::concatenate(const AnsatzLayout& a, const AnsatzLayout& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("mismatched layout registers");
  AnsatzLayout out = a;
  out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
  out.schedule_descriptor = a.schedule_descriptor + " + " + b.schedule_descriptor;
  return out;
}

AnsatzLayout AnsatzLayout::reversed() const {
  AnsatzLayout out = *this;
  std::reverse(out.gates.begin(), out.gates.end());
  out.schedule_descriptor = "reverse(" + schedule_descriptor + ")";
  return out;
}

AnsatzLayout build_layout(int n_qubits, const Schedule& schedule) {
  if (n_qubits < 2) throw ScheduleError("a PNC layout needs at least 2 qubits");
  if (schedule.sweeps.empty()) throw ScheduleError("schedule has no sweeps");
  if (schedule.budget && *schedule.budget < 1) throw ScheduleError("budget must be >= 1");
  AnsatzLayout layout;
  layout.n_qubits = n_qubits;
  layout.schedule_descriptor = to_string(schedule);
  const auto cap = schedule.budget ? static_cast<std::size_t>(*schedule.budget)
                                   : std::numeric_limits<std::size_t>::max();
  for (int d : schedule.sweeps) {
    for (int q = 0; q + d < n_qubits; ++q) {
      if (layout.gates.size() == cap) return layout;
      layout.gates.push_back({q, q + d});
    }
  }
  return layout;
}

AnsatzLayout build_layout(int n_qubits, std::string_view schedule_text) {
  return build_layout(n_qubits, parse_schedule(schedule_text));
}

Statevector prepare_state(const AnsatzLayout& layout, const std::vector<double>& theta,
                          const Statevector& reference) {
  if (theta.size() != layout.gates.size()) {
    throw std::invalid_argument("parameter vector has " + std::to_string(theta.size()) +
                                " entries for " + std::to_string(layout.gates.size()) +
                                " gates");
  }
  if (reference.n_qubits() != layout.n_qubits) {
    throw std::invalid_argument("reference state and layout registers differ");
  }
  Statevector state = reference;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    apply_pnc(state, layout.gates[k].first, layout.gates[k].second, theta[k]);
  }
  return state;
}

std::size_t cnot_count(const AnsatzLayout& layout) {
  return kCnotsPerPncGate * layout.gates.size();
}

std::size_t count_determinants(const Statevector& state, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  std::size_t n = 0;
  for (const Complex& a : state.amplitudes()) {
    if (std::abs(a) > threshold) ++n;
  }
  return n;
}

}  // namespace mrucc
