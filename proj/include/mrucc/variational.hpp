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

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mrucc/ansatz.hpp"
#include "mrucc/fci.hpp"
#include "mrucc/fermion.hpp"
#include "mrucc/operator.hpp"

namespace mrucc {

class OptimizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdamConfig {
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_iterations = 2000;
  double gradient_tol = 1e-6;
  /// Stop once |E_t - E_{t-energy_window}| < energy_tol.
  double energy_tol = 1e-10;
  int energy_window = 10;
  std::uint64_t seed = 7;
  /// Caps the Euclidean length of a single update, if set.
  std::optional<double> max_step;

  static AdamConfig stage1_defaults();
  static AdamConfig stage2_defaults();

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

enum class StopReason {
  kMaxIterations,
  kGradientTol,
  kEnergyWindow,
  kTrustRadius,
  kReferenceThreshold,
  kNoParameters,
};

std::string to_string(StopReason reason);

struct IterationRecord {
  int iteration = 0;
  double energy = 0.0;
  double gradient_norm = 0.0;
};

/// Adam moments and step counter; exposed for loops whose objective changes
/// between steps.
class Adam {
 public:
  Adam(const AdamConfig& cfg, std::size_t dimension);

  /// Update to add to the parameters for gradient `grad`.
  std::vector<double> step(const std::vector<double>& grad);
  int steps_taken() const { return t_; }

 private:
  AdamConfig cfg_;
  std::vector<double> m_;
  std::vector<double> v_;
  int t_ = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;
using ValueGradient =
    std::function<std::pair<double, std::vector<double>>(const std::vector<double>&)>;

struct AdamResult {
  std::vector<double> x_star;  // best seen
  double value = 0.0;          // objective at x_star
  std::vector<IterationRecord> history;
  StopReason stop_reason = StopReason::kMaxIterations;
};

/// Throws OptimizerError on a non-finite objective or gradient.
AdamResult adam_minimize(const ValueGradient& f, std::vector<double> x0, const AdamConfig& cfg);
AdamResult adam_minimize(const Objective& objective, const GradientFn& gradient,
                         std::vector<double> x0, const AdamConfig& cfg);

struct Stage1Result {
  std::vector<double> theta_star;
  double energy = 0.0;
  std::vector<IterationRecord> history;
  Statevector state{1};
  StopReason stop_reason = StopReason::kMaxIterations;
};

/// theta starts uniform in (-0.1, 0.1) from cfg.seed.
std::vector<double> stage1_initial_theta(std::size_t count, std::uint64_t seed);

Stage1Result run_stage1(const LinearOperator& hamiltonian, const AnsatzLayout& layout,
                        const Statevector& reference, const AdamConfig& cfg);
Stage1Result run_stage1(const PauliSum& hamiltonian, const AnsatzLayout& layout,
                        const Statevector& reference, const AdamConfig& cfg);

/// C_k = [A_k, H] for every generator, truncated at kDefaultTruncation.
std::vector<PauliSum> compute_commutators(const ClusterPool& pool, const PauliSum& hamiltonian);

enum class Stage2Mode { kLinear, kIterative, kExact };

Stage2Mode parse_stage2_mode(std::string_view text);
std::string to_string(Stage2Mode mode);

struct Stage2StopRule {
  /// Stop when ||c|| would exceed this radius.
  std::optional<double> trust_radius;
  /// Stop when the model energy falls within reference_threshold of this.
  std::optional<double> reference_energy;
  double reference_threshold = 1e-5;
};

struct Stage2Config {
  Stage2Mode mode = Stage2Mode::kIterative;
  AdamConfig adam = AdamConfig::stage2_defaults();
  Stage2StopRule stop;
  /// Per-step bound on ||delta c|| in iterative mode.
  double step_radius = 0.05;
  /// Central-difference step for the exact-mode gradient.
  double fd_step = 1e-6;
};

struct Stage2Record {
  int iteration = 0;
  double energy_model = 0.0;
  double energy_exact = 0.0;
  double gradient_norm = 0.0;
  double c_norm = 0.0;
};

struct Stage2Result {
  std::vector<double> c_star;  // indexed by generator id
  double energy_bch = 0.0;
  double energy_exact = 0.0;
  Stage2Mode mode = Stage2Mode::kIterative;
  std::vector<Stage2Record> history;
  StopReason stop_reason = StopReason::kMaxIterations;
  /// Iteration whose c is reported; the last one in linear mode.
  int best_iteration = 0;
};

/**
 * @brief Sector-restricted matrices shared by the stage-2 modes.
 *
 * H and every generator conserve particle number, so their sector blocks
 * represent them exactly on sector states.
 */
class Stage2Problem {
 public:
  Stage2Problem(const PauliSum& hamiltonian, const ClusterPool& pool, const Statevector& psi);

  const SectorBasis& basis() const { return basis_; }
  const RealSparse& hamiltonian() const { return h_; }
  const std::vector<RealSparse>& generators() const { return a_; }
  const Eigen::VectorXd& psi() const { return psi_; }
  std::size_t size() const { return a_.size(); }

  /// A(c) = sum_k c_k A_k.
  RealSparse generator(const std::vector<double>& c) const;
  /// <psi|e^{-A(c)} H e^{A(c)}|psi>.
  double exact_energy(const std::vector<double>& c) const;
  Eigen::VectorXd rotated_state(const std::vector<double>& c) const;
  /// g_k = <phi|[A_k, H]|phi> = -2 <H phi|A_k phi>.
  std::vector<double> commutator_expectations(const Eigen::VectorXd& phi) const;

 private:
  SectorBasis basis_;
  RealSparse h_;
  std::vector<RealSparse> a_;
  Eigen::VectorXd psi_;
};

Stage2Result run_stage2(const Stage2Problem& problem, const std::vector<PauliSum>& commutators,
                        const Stage2Config& cfg);
/// Builds the sector problem and, in linear mode, the commutator cache.
Stage2Result run_stage2(const PauliSum& hamiltonian, const Statevector& psi,
                        const ClusterPool& pool, const Stage2Config& cfg);

}  // namespace mrucc
