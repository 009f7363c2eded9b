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

#include "mrucc/variational.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "mrucc/gradient.hpp"

namespace mrucc {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void require_finite(double value, const std::vector<double>& grad) {
  if (!std::isfinite(value)) throw OptimizerError("objective is not finite");
  if (!all_finite(grad)) throw OptimizerError("gradient is not finite");
}

}  // namespace

AdamConfig AdamConfig::stage1_defaults() {
  AdamConfig cfg;
  cfg.learning_rate = 0.02;
  cfg.max_iterations = 6000;
  return cfg;
}

AdamConfig AdamConfig::stage2_defaults() {
  AdamConfig cfg;
  cfg.learning_rate = 0.01;
  cfg.max_iterations = 500;
  cfg.gradient_tol = 1e-7;
  cfg.energy_tol = 1e-7;
  cfg.energy_window = 20;
  return cfg;
}

void AdamConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (!(beta1 > 0.0 && beta1 < 1.0)) throw std::invalid_argument("beta1 must be in (0, 1)");
  if (!(beta2 > 0.0 && beta2 < 1.0)) throw std::invalid_argument("beta2 must be in (0, 1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
  if (!(gradient_tol > 0.0)) throw std::invalid_argument("gradient_tol must be > 0");
  if (!(energy_tol > 0.0)) throw std::invalid_argument("energy_tol must be > 0");
  if (energy_window < 1) throw std::invalid_argument("energy_window must be >= 1");
  if (max_step && !(*max_step > 0.0)) throw std::invalid_argument("max_step must be > 0");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kMaxIterations: return "max_iterations";
    case StopReason::kGradientTol: return "gradient_tol";
    case StopReason::kEnergyWindow: return "energy_window";
    case StopReason::kTrustRadius: return "trust_radius";
    case StopReason::kReferenceThreshold: return "reference_threshold";
    case StopReason::kNoParameters: return "no_parameters";
  }
  return "unknown";
}

Adam::Adam(const AdamConfig& cfg, std::size_t dimension)
    : cfg_(cfg), m_(dimension, 0.0), v_(dimension, 0.0) {
  cfg_.validate();
}

std::vector<double> Adam::step(const std::vector<double>& grad) {
  if (grad.size() != m_.size()) throw std::invalid_argument("gradient length changed");
  ++t_;
  const double c1 = 1.0 - std::pow(cfg_.beta1, t_);
  const double c2 = 1.0 - std::pow(cfg_.beta2, t_);
  std::vector<double> dx(grad.size());
  for (std::size_t k = 0; k < grad.size(); ++k) {
    m_[k] = cfg_.beta1 * m_[k] + (1.0 - cfg_.beta1) * grad[k];
    v_[k] = cfg_.beta2 * v_[k] + (1.0 - cfg_.beta2) * grad[k] * grad[k];
    dx[k] = -cfg_.learning_rate * (m_[k] / c1) / (std::sqrt(v_[k] / c2) + cfg_.epsilon);
  }
  if (cfg_.max_step) {
    const double n = norm2(dx);
    if (n > *cfg_.max_step) {
      for (double& x : dx) x *= *cfg_.max_step / n;
    }
  }
  return dx;
}

AdamResult adam_minimize(const ValueGradient& f, std::vector<double> x0, const AdamConfig& cfg) {
  cfg.validate();
  AdamResult out;
  std::vector<double> x = std::move(x0);
  if (x.empty()) {
    auto [value, grad] = f(x);
    require_finite(value, grad);
    out.value = value;
    out.history.push_back({0, value, 0.0});
    out.stop_reason = StopReason::kNoParameters;
    return out;
  }
  Adam adam(cfg, x.size());
  out.value = std::numeric_limits<double>::infinity();
  for (int it = 0;; ++it) {
    auto [value, grad] = f(x);
    require_finite(value, grad);
    if (grad.size() != x.size()) throw std::invalid_argument("gradient length mismatch");
    const double gnorm = norm2(grad);
    out.history.push_back({it, value, gnorm});
    if (value < out.value) {
      out.value = value;
      out.x_star = x;
    }
    if (it >= cfg.max_iterations) {
      out.stop_reason = StopReason::kMaxIterations;
      break;
    }
    if (gnorm < cfg.gradient_tol) {
      out.stop_reason = StopReason::kGradientTol;
      break;
    }
    if (it >= cfg.energy_window &&
        std::abs(value - out.history[static_cast<std::size_t>(it - cfg.energy_window)].energy) <
            cfg.energy_tol) {
      out.stop_reason = StopReason::kEnergyWindow;
      break;
    }
    const auto dx = adam.step(grad);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += dx[k];
  }
  return out;
}

AdamResult adam_minimize(const Objective& objective, const GradientFn& gradient,
                         std::vector<double> x0, const AdamConfig& cfg) {
  return adam_minimize(
      [&](const std::vector<double>& x) { return std::make_pair(objective(x), gradient(x)); },
      std::move(x0), cfg);
}

std::vector<double> stage1_initial_theta(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.1, 0.1);
  std::vector<double> theta(count);
  for (double& t : theta) t = dist(rng);
  return theta;
}

Stage1Result run_stage1(const LinearOperator& hamiltonian, const AnsatzLayout& layout,
                        const Statevector& reference, const AdamConfig& cfg) {
  if (hamiltonian.n_qubits() != layout.n_qubits || reference.n_qubits() != layout.n_qubits) {
    throw std::invalid_argument("Hamiltonian, layout and reference registers differ");
  }
  const auto f = [&](const std::vector<double>& theta) {
    auto eg = stage1_energy_gradient(hamiltonian, layout, theta, reference);
    return std::make_pair(eg.energy, std::move(eg.gradient));
  };
  AdamResult opt =
      adam_minimize(f, stage1_initial_theta(layout.parameter_count(), cfg.seed), cfg);
  Stage1Result out;
  out.theta_star = std::move(opt.x_star);
  out.state = prepare_state(layout, out.theta_star, reference);
  out.energy = hamiltonian.expectation(out.state);
  out.history = std::move(opt.history);
  out.stop_reason = opt.stop_reason;
  return out;
}

Stage1Result run_stage1(const PauliSum& hamiltonian, const AnsatzLayout& layout,
                        const Statevector& reference, const AdamConfig& cfg) {
  if (!is_hermitian(hamiltonian, 1e-10)) {
    throw std::invalid_argument("stage-1 Hamiltonian must be Hermitian");
  }
  return run_stage1(PauliOperator(hamiltonian), layout, reference, cfg);
}

std::vector<PauliSum> compute_commutators(const ClusterPool& pool,
                                          const PauliSum& hamiltonian) {
  if (pool.n_spin_orbitals != hamiltonian.n_qubits()) {
    throw std::invalid_argument("pool and Hamiltonian register sizes differ");
  }
  std::vector<PauliSum> out;
  out.reserve(pool.size());
  for (const auto& gen : pool.generators) {
    if (!is_anti_hermitian(gen.pauli_form, 1e-10)) {
      throw std::invalid_argument("generator " + gen.describe() + " is not anti-Hermitian");
    }
    out.push_back(commutator(gen.pauli_form, hamiltonian, kDefaultTruncation));
  }
  return out;
}

Stage2Mode parse_stage2_mode(std::string_view text) {
  if (text == "linear") return Stage2Mode::kLinear;
  if (text == "iterative") return Stage2Mode::kIterative;
  if (text == "exact") return Stage2Mode::kExact;
  throw std::invalid_argument("unknown stage-2 mode '" + std::string(text) +
                              "' (expected linear, iterative or exact)");
}

std::string to_string(Stage2Mode mode) {
  switch (mode) {
    case Stage2Mode::kLinear: return "linear";
    case Stage2Mode::kIterative: return "iterative";
    case Stage2Mode::kExact: return "exact";
  }
  return "unknown";
}

Stage2Problem::Stage2Problem(const PauliSum& hamiltonian, const ClusterPool& pool,
                             const Statevector& psi)
    : basis_(psi.n_qubits(), [&] {
        // Weight of the dominant amplitude fixes the sector.
        std::uint64_t arg = 0;
        double best = -1.0;
        for (std::uint64_t j = 0; j < psi.dimension(); ++j) {
          if (std::abs(psi[j]) > best) {
            best = std::abs(psi[j]);
            arg = j;
          }
        }
        return std::popcount(arg);
      }()) {
  if (hamiltonian.n_qubits() != psi.n_qubits() || pool.n_spin_orbitals != psi.n_qubits()) {
    throw std::invalid_argument("Hamiltonian, pool and state registers differ");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("stage-2 state must be normalized");
  }
  if (!is_hermitian(hamiltonian, 1e-10)) {
    throw std::invalid_argument("stage-2 Hamiltonian must be Hermitian");
  }
  psi_ = gather_real(psi, basis_);
  h_ = real_sector_matrix(hamiltonian, basis_);
  a_.reserve(pool.size());
  for (const auto& gen : pool.generators) {
    if (!is_anti_hermitian(gen.pauli_form, 1e-10)) {
      throw std::invalid_argument("generator " + gen.describe() + " is not anti-Hermitian");
    }
    a_.push_back(real_sector_matrix(gen.pauli_form, basis_));
  }
}

RealSparse Stage2Problem::generator(const std::vector<double>& c) const {
  if (c.size() != a_.size()) throw std::invalid_argument("amplitude vector length mismatch");
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  RealSparse sum(dim, dim);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0.0) sum += c[k] * a_[k];
  }
  return sum;
}

Eigen::VectorXd Stage2Problem::rotated_state(const std::vector<double>& c) const {
  return sector_exponential(generator(c), psi_);
}

double Stage2Problem::exact_energy(const std::vector<double>& c) const {
  const Eigen::VectorXd phi = rotated_state(c);
  return phi.dot(h_ * phi);
}

std::vector<double> Stage2Problem::commutator_expectations(const Eigen::VectorXd& phi) const {
  const Eigen::VectorXd hphi = h_ * phi;
  std::vector<double> g(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) g[k] = -2.0 * hphi.dot(a_[k] * phi);
  return g;
}

namespace {

struct ModelPoint {
  double energy = 0.0;
  std::vector<double> gradient;
};

}  // namespace

Stage2Result run_stage2(const Stage2Problem& problem, const std::vector<PauliSum>& commutators,
                        const Stage2Config& cfg) {
  cfg.adam.validate();
  if (cfg.stop.trust_radius && !(*cfg.stop.trust_radius > 0.0)) {
    throw std::invalid_argument("trust radius must be > 0");
  }
  if (!(cfg.step_radius > 0.0)) throw std::invalid_argument("step radius must be > 0");
  if (!(cfg.fd_step > 0.0)) throw std::invalid_argument("finite-difference step must be > 0");

  const std::size_t n = problem.size();
  const Eigen::VectorXd& psi = problem.psi();
  const double e0 = psi.dot(problem.hamiltonian() * psi);

  Stage2Result out;
  out.mode = cfg.mode;
  out.c_star.assign(n, 0.0);
  if (n == 0) {
    out.energy_bch = e0;
    out.energy_exact = e0;
    out.history.push_back({0, e0, e0, 0.0, 0.0});
    out.stop_reason = StopReason::kNoParameters;
    return out;
  }

  std::vector<double> g_lin;
  AdamConfig adam_cfg = cfg.adam;
  switch (cfg.mode) {
    case Stage2Mode::kLinear: {
      if (commutators.size() != n) {
        throw std::invalid_argument("linear mode needs one cached commutator per generator");
      }
      const Statevector full = scatter(psi, problem.basis());
      g_lin.resize(n);
      for (std::size_t k = 0; k < n; ++k) g_lin[k] = expectation(full, commutators[k]);
      break;
    }
    case Stage2Mode::kIterative:
      adam_cfg.max_step = cfg.step_radius;
      break;
    case Stage2Mode::kExact:
      break;
  }

  std::vector<double> c(n, 0.0);
  const auto evaluate = [&]() -> ModelPoint {
    ModelPoint p;
    switch (cfg.mode) {
      case Stage2Mode::kLinear: {
        p.energy = e0;
        for (std::size_t k = 0; k < n; ++k) p.energy -= c[k] * g_lin[k];
        p.gradient.resize(n);
        for (std::size_t k = 0; k < n; ++k) p.gradient[k] = -g_lin[k];
        break;
      }
      case Stage2Mode::kIterative: {
        // Linear model of e^{-A(c)} H e^{A(c)} re-expanded at the current c.
        const Eigen::VectorXd phi = problem.rotated_state(c);
        p.energy = phi.dot(problem.hamiltonian() * phi);
        p.gradient = problem.commutator_expectations(phi);
        for (double& x : p.gradient) x = -x;
        break;
      }
      case Stage2Mode::kExact: {
        p.energy = problem.exact_energy(c);
        p.gradient.resize(n);
        std::vector<double> shifted = c;
        for (std::size_t k = 0; k < n; ++k) {
          shifted[k] = c[k] + cfg.fd_step;
          const double ep = problem.exact_energy(shifted);
          shifted[k] = c[k] - cfg.fd_step;
          const double em = problem.exact_energy(shifted);
          shifted[k] = c[k];
          p.gradient[k] = (ep - em) / (2.0 * cfg.fd_step);
        }
        break;
      }
    }
    return p;
  };

  Adam adam(adam_cfg, n);
  double c_norm = 0.0;
  for (int it = 0;; ++it) {
    const ModelPoint p = evaluate();
    require_finite(p.energy, p.gradient);
    const double e_exact =
        cfg.mode == Stage2Mode::kLinear ? problem.exact_energy(c) : p.energy;
    if (!std::isfinite(e_exact)) throw OptimizerError("exact energy is not finite");
    const double gnorm = norm2(p.gradient);
    out.history.push_back({it, p.energy, e_exact, gnorm, c_norm});
    // Linear mode reports its stopping point; the other modes keep the
    // iterate with the lowest exact energy.
    if (cfg.mode == Stage2Mode::kLinear || it == 0 || e_exact < out.energy_exact) {
      out.energy_bch = p.energy;
      out.energy_exact = e_exact;
      out.c_star = c;
      out.best_iteration = it;
    }

    if (cfg.stop.reference_energy &&
        p.energy - *cfg.stop.reference_energy < cfg.stop.reference_threshold) {
      out.stop_reason = StopReason::kReferenceThreshold;
      break;
    }
    if (it >= adam_cfg.max_iterations) {
      out.stop_reason = StopReason::kMaxIterations;
      break;
    }
    if (gnorm < adam_cfg.gradient_tol) {
      out.stop_reason = StopReason::kGradientTol;
      break;
    }
    const int w = adam_cfg.energy_window;
    if (it >= w && std::abs(p.energy - out.history[static_cast<std::size_t>(it - w)]
                                           .energy_model) < adam_cfg.energy_tol) {
      out.stop_reason = StopReason::kEnergyWindow;
      break;
    }
    const std::vector<double> dc = adam.step(p.gradient);
    std::vector<double> next = c;
    for (std::size_t k = 0; k < n; ++k) next[k] += dc[k];
    const double next_norm = norm2(next);
    if (cfg.stop.trust_radius && next_norm > *cfg.stop.trust_radius) {
      out.stop_reason = StopReason::kTrustRadius;
      break;
    }
    c = std::move(next);
    c_norm = next_norm;
  }
  return out;
}

Stage2Result run_stage2(const PauliSum& hamiltonian, const Statevector& psi,
                        const ClusterPool& pool, const Stage2Config& cfg) {
  const Stage2Problem problem(hamiltonian, pool, psi);
  std::vector<PauliSum> commutators;
  if (cfg.mode == Stage2Mode::kLinear) commutators = compute_commutators(pool, hamiltonian);
  return run_stage2(problem, commutators, cfg);
}

}  // namespace mrucc
