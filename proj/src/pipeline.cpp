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

#include "mrucc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mrucc/ansatz.hpp"
#include "mrucc/fci.hpp"
#include "mrucc/fermion.hpp"
#include "mrucc/gradient.hpp"
#include "mrucc/profiles.hpp"

namespace mrucc {

namespace {

std::string format_double(double v, const char* fmt) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

Schedule schedule_with_budget(const std::string& text, std::optional<int> budget) {
  Schedule s = parse_schedule(text);
  if (budget) {
    if (*budget < 1) throw ScheduleError("budget must be >= 1");
    s.budget = *budget;
  }
  return s;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string r_text;
    std::string path_text;
    if (!(fields >> r_text)) continue;
    if (!(fields >> path_text)) {
      throw ConfigError("manifest line " + std::to_string(line_no) + ": expected '<R> <path>'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ConfigError("manifest line " + std::to_string(line_no) + ": trailing field '" +
                        extra + "'");
    }
    double r = 0.0;
    try {
      std::size_t used = 0;
      r = std::stod(r_text, &used);
      if (used != r_text.size()) throw std::invalid_argument(r_text);
    } catch (const std::exception&) {
      throw ConfigError("manifest line " + std::to_string(line_no) + ": bad bond length '" +
                        r_text + "'");
    }
    if (!(r > 0.0)) {
      throw ConfigError("manifest line " + std::to_string(line_no) + ": bond length must be > 0");
    }
    if (!out.empty() && !(r > *out.back().bond_length)) {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": bond lengths must be strictly increasing");
    }
    std::filesystem::path p(path_text);
    if (p.is_relative()) p = base_dir / p;
    if (!std::filesystem::exists(p)) {
      throw ConfigError("manifest line " + std::to_string(line_no) + ": missing file " +
                        p.string());
    }
    out.push_back({r, p});
  }
  if (out.empty()) throw ConfigError("manifest has no entries");
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw ConfigError("cannot open manifest " + manifest.string());
  return parse_manifest(in, manifest.parent_path());
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

void RunConfig::validate() const {
  if (inputs.empty()) throw ConfigError("no inputs given");
  for (const auto& e : inputs) {
    if (!std::filesystem::exists(e.path)) throw ConfigError("missing file " + e.path.string());
  }
  for (std::size_t k = 1; k < inputs.size(); ++k) {
    const auto& a = inputs[k - 1].bond_length;
    const auto& b = inputs[k].bond_length;
    if (a && b && !(*b > *a)) throw ConfigError("bond lengths must be strictly increasing");
  }
  if (!profile.empty()) find_profile(profile);
  if (!schedule.empty()) parse_schedule(schedule);
  if (budget && *budget < 1) throw ConfigError("budget must be >= 1");
  if (workers < 1) throw ConfigError("worker count must be >= 1");
  stage1.validate();
  stage2.adam.validate();
}

std::string resolve_schedule(const RunConfig& cfg, int n_spatial, int n_electrons) {
  if (!cfg.schedule.empty()) return cfg.schedule;
  if (!cfg.profile.empty()) return find_profile(cfg.profile).schedule;
  if (auto p = match_profile(n_spatial, n_electrons)) return p->schedule;
  return std::string(kGenericSchedule);
}

PointResult run_point(const ManifestEntry& entry, const RunConfig& cfg) {
  PointResult r;
  r.bond_length = entry.bond_length;
  r.file = entry.path.string();
  r.seed = cfg.seed;
  try {
    const MolecularSystem sys = load_fcidump(entry.path);
    const SpinIntegrals spin = spin_expand(sys, cfg.ordering);
    const PauliSum h = qubit_hamiltonian(spin);
    const std::vector<int> occ = default_occupation(spin);
    r.n_qubits = spin.n_spin_orbitals;
    r.n_electrons = spin.n_electrons;

    const FciResult fci = fci_ground_energy(h, spin.n_electrons);
    r.e_fci = fci.energy;
    r.e_hf = hf_energy(spin, occ);

    r.schedule = resolve_schedule(cfg, sys.n_spatial, sys.n_electrons);
    const AnsatzLayout layout =
        build_layout(r.n_qubits, schedule_with_budget(r.schedule, cfg.budget));
    r.schedule = layout.schedule_descriptor;
    r.params = layout.parameter_count();
    r.cnots = cnot_count(layout);

    const SectorOperator h_sector(h, fci.basis);
    AdamConfig s1cfg = cfg.stage1;
    s1cfg.seed = cfg.seed;
    const Statevector reference = hf_state(r.n_qubits, occ);
    Stage1Result s1 = run_stage1(h_sector, layout, reference, s1cfg);
    r.e_mr = s1.energy;
    r.determinants = count_determinants(s1.state);

    const ClusterPool pool = build_uccsd_pool(r.n_qubits, occ, cfg.ordering);
    r.pool_size = pool.size();
    Stage2Config s2cfg = cfg.stage2;
    if (cfg.fci_reference_stop) s2cfg.stop.reference_energy = fci.energy;
    const Stage2Problem problem(h, pool, s1.state);
    std::vector<PauliSum> commutators;
    if (s2cfg.mode == Stage2Mode::kLinear) commutators = compute_commutators(pool, h);
    Stage2Result s2 = run_stage2(problem, commutators, s2cfg);
    r.e_mruccsd = s2.energy_exact;
    r.e_bch = s2.energy_bch;
    r.stop_reason = to_string(s1.stop_reason) + "/" + to_string(s2.stop_reason);
    if (cfg.keep_history) {
      r.stage1_history = std::move(s1.history);
      r.stage2_history = std::move(s2.history);
    }
    r.ok = true;
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }
  return r;
}

std::vector<PointResult> cmd_energies(const RunConfig& cfg) {
  cfg.validate();
  std::vector<PointResult> rows(cfg.inputs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      rows[k] = run_point(cfg.inputs[k], cfg);
    }
  };
  const int n_threads =
      std::max(1, std::min<int>(cfg.workers, static_cast<int>(cfg.inputs.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<PointResult>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    const double nan = std::nan("");
    const auto v = [&](double x) { return format_double(r.ok ? x : nan, "%.12f"); };
    const auto e = [&](double x) { return format_double(r.ok ? x : nan, "%.6e"); };
    out << (r.bond_length ? format_double(*r.bond_length, "%.4f") : "") << ',' << v(r.e_hf)
        << ',' << v(r.e_mr) << ',' << v(r.e_mruccsd) << ',' << v(r.e_fci) << ','
        << e(r.err_hf()) << ',' << e(r.err_mr()) << ',' << e(r.err_mruccsd()) << ','
        << (r.ok ? std::to_string(r.params) : "") << ','
        << (r.ok ? std::to_string(r.cnots) : "") << ',' << (r.ok ? r.stop_reason : "failed")
        << ',' << r.seed << '\n';
  }
}

namespace {

nlohmann::ordered_json adam_json(const AdamConfig& c) {
  nlohmann::ordered_json j;
  j["learning_rate"] = c.learning_rate;
  j["beta1"] = c.beta1;
  j["beta2"] = c.beta2;
  j["epsilon"] = c.epsilon;
  j["max_iterations"] = c.max_iterations;
  j["gradient_tol"] = c.gradient_tol;
  j["energy_tol"] = c.energy_tol;
  j["energy_window"] = c.energy_window;
  if (c.max_step) j["max_step"] = *c.max_step;
  return j;
}

}  // namespace

void write_json(std::ostream& out, const RunConfig& cfg, const std::vector<PointResult>& rows) {
  nlohmann::ordered_json doc;
  auto& config = doc["config"];
  config["profile"] = cfg.profile;
  config["schedule"] = cfg.schedule;
  if (cfg.budget) config["budget"] = *cfg.budget;
  config["ordering"] = std::string(to_string(cfg.ordering));
  config["seed"] = cfg.seed;
  config["stage1"] = adam_json(cfg.stage1);
  auto& s2 = config["stage2"];
  s2["mode"] = to_string(cfg.stage2.mode);
  s2["adam"] = adam_json(cfg.stage2.adam);
  s2["step_radius"] = cfg.stage2.step_radius;
  s2["fd_step"] = cfg.stage2.fd_step;
  if (cfg.stage2.stop.trust_radius) s2["trust_radius"] = *cfg.stage2.stop.trust_radius;
  s2["fci_reference_stop"] = cfg.fci_reference_stop;
  s2["reference_threshold"] = cfg.stage2.stop.reference_threshold;

  auto& points = doc["points"];
  points = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json p;
    if (r.bond_length) p["R"] = *r.bond_length;
    p["file"] = r.file;
    p["ok"] = r.ok;
    if (!r.ok) {
      p["error"] = r.error;
      points.push_back(std::move(p));
      continue;
    }
    p["seed"] = r.seed;
    p["energies"] = {{"HF", r.e_hf},
                     {"MR", r.e_mr},
                     {"MRUCCSD", r.e_mruccsd},
                     {"MRUCCSD_bch", r.e_bch},
                     {"FCI", r.e_fci}};
    p["errors"] = {{"HF", r.err_hf()}, {"MR", r.err_mr()}, {"MRUCCSD", r.err_mruccsd()}};
    p["resources"] = {{"qubits", r.n_qubits},
                      {"electrons", r.n_electrons},
                      {"schedule", r.schedule},
                      {"params", r.params},
                      {"cnots", r.cnots},
                      {"pool", r.pool_size},
                      {"determinants", r.determinants}};
    p["stop_reason"] = r.stop_reason;
    auto h1 = nlohmann::ordered_json::array();
    for (const auto& it : r.stage1_history) h1.push_back({it.iteration, it.energy, it.gradient_norm});
    p["stage1_history"] = std::move(h1);
    auto h2 = nlohmann::ordered_json::array();
    for (const auto& it : r.stage2_history) {
      h2.push_back({it.iteration, it.energy_model, it.energy_exact, it.gradient_norm, it.c_norm});
    }
    p["stage2_history"] = std::move(h2);
    points.push_back(std::move(p));
  }
  out << doc.dump(2) << '\n';
}

ResourceReport cmd_resources(int n_qubits, const std::string& schedule) {
  const AnsatzLayout layout = build_layout(n_qubits, schedule);
  return {n_qubits, layout.gates.size(), layout.parameter_count(), cnot_count(layout),
          layout.schedule_descriptor};
}

ResourceReport cmd_resources(const std::string& profile, const std::string& schedule,
                             std::optional<int> budget) {
  const MoleculeProfile& p = find_profile(profile);
  const AnsatzLayout layout = build_layout(
      p.n_qubits(), schedule_with_budget(schedule.empty() ? p.schedule : schedule, budget));
  return {p.n_qubits(), layout.gates.size(), layout.parameter_count(), cnot_count(layout),
          layout.schedule_descriptor};
}

namespace {

template <typename F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult c{name, false, ""};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("error: ") + e.what();
  }
  return c;
}

std::string sci(double v) { return format_double(v, "%.3e"); }

}  // namespace

std::vector<CheckResult> verify_system(const MolecularSystem& sys, std::size_t parse_conflicts,
                                       const RunConfig& cfg) {
  std::vector<CheckResult> checks;
  const SpinIntegrals spin = spin_expand(sys, cfg.ordering);
  const PauliSum h = qubit_hamiltonian(spin);
  const std::vector<int> occ = default_occupation(spin);
  const int n = spin.n_spin_orbitals;
  std::mt19937_64 rng(cfg.seed);

  checks.push_back(run_check("integral_symmetry", [&](CheckResult& c) {
    const double asym = sys.one_body_asymmetry();
    c.passed = parse_conflicts == 0 && asym <= kFcidumpConflictTol;
    c.detail = "conflicts " + std::to_string(parse_conflicts) + ", h1 asymmetry " + sci(asym);
  }));

  checks.push_back(run_check("hamiltonian_hermitian", [&](CheckResult& c) {
    double worst = 0.0;
    for (const auto& [label, coeff] : h.terms()) worst = std::max(worst, std::abs(coeff.imag()));
    c.passed = is_hermitian(h, 1e-10);
    c.detail = std::to_string(h.size()) + " terms, max |imag| " + sci(worst);
  }));

  checks.push_back(run_check("number_conservation", [&](CheckResult& c) {
    const double residue = commutator(h, number_operator(n)).one_norm();
    c.passed = residue < 1e-10;
    c.detail = "||[H, N]||_1 = " + sci(residue);
  }));

  checks.push_back(run_check("hf_energy_consistency", [&](CheckResult& c) {
    const double direct = hf_energy(spin, occ);
    const double via_state = expectation(hf_state(n, occ), h);
    c.passed = std::abs(direct - via_state) < 1e-10;
    c.detail = "|<HF|H|HF> - E_HF| = " + sci(std::abs(direct - via_state));
  }));

  const std::string schedule = resolve_schedule(cfg, sys.n_spatial, sys.n_electrons);
  const AnsatzLayout layout = build_layout(n, schedule);
  const Statevector reference = hf_state(n, occ);

  checks.push_back(run_check("pnc_conservation", [&](CheckResult& c) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      AnsatzLayout random_layout{n, {}, "random"};
      for (int g = 0; g < 3 * n; ++g) {
        const int a = qubit(rng);
        int b = qubit(rng);
        while (b == a) b = qubit(rng);
        random_layout.gates.push_back({a, b});
      }
      std::vector<double> theta(random_layout.gates.size());
      for (double& t : theta) t = angle(rng);
      const Statevector s = prepare_state(random_layout, theta, reference);
      worst = std::max(worst, s.weight_outside_sector(static_cast<int>(occ.size())));
    }
    c.passed = worst < 1e-12;
    c.detail = "100 random layouts, max leaked weight " + sci(worst);
  }));

  checks.push_back(run_check("stage1_gradient", [&](CheckResult& c) {
    const PauliOperator op(h);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::vector<double> theta(layout.parameter_count());
    for (double& t : theta) t = angle(rng);
    const auto adjoint = stage1_gradient(op, layout, theta, reference);
    const auto fd = stage1_gradient_fd(op, layout, theta, reference, 1e-5);
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < fd.size(); ++k) {
      diff = std::max(diff, std::abs(adjoint[k] - fd[k]));
      scale = std::max(scale, std::abs(fd[k]));
    }
    const double rel = scale > 0.0 ? diff / scale : 0.0;
    c.passed = diff < 1e-10 || rel < 1e-6;
    c.detail = std::to_string(theta.size()) + " parameters, max |adjoint - fd| " + sci(diff) +
               ", relative " + sci(rel);
  }));

  checks.push_back(run_check("commutator_routes", [&](CheckResult& c) {
    const ClusterPool pool = build_uccsd_pool(n, occ, cfg.ordering);
    std::uniform_real_distribution<double> angle(-0.3, 0.3);
    std::vector<double> theta(layout.parameter_count());
    for (double& t : theta) t = angle(rng);
    const Statevector psi = prepare_state(layout, theta, reference);
    const auto symbolic = compute_commutators(pool, h);
    const Stage2Problem problem(h, pool, psi);
    const auto via_state = problem.commutator_expectations(problem.psi());
    double diff = 0.0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      diff = std::max(diff, std::abs(expectation(psi, symbolic[k]) - via_state[k]));
    }
    c.passed = diff < 1e-10;
    c.detail = std::to_string(pool.size()) + " generators, max route difference " + sci(diff);
  }));

  checks.push_back(run_check("bch_order", [&](CheckResult& c) {
    const ClusterPool pool = build_uccsd_pool(n, occ, cfg.ordering);
    std::uniform_real_distribution<double> angle(-0.3, 0.3);
    std::vector<double> theta(layout.parameter_count());
    for (double& t : theta) t = angle(rng);
    const Statevector psi = prepare_state(layout, theta, reference);
    const Stage2Problem problem(h, pool, psi);
    const auto g = problem.commutator_expectations(problem.psi());
    const double e0 = problem.psi().dot(problem.hamiltonian() * problem.psi());
    std::normal_distribution<double> normal;
    std::vector<double> dir(pool.size());
    double len = 0.0;
    for (double& d : dir) {
      d = normal(rng);
      len += d * d;
    }
    len = std::sqrt(len);
    const auto gap = [&](double scale) {
      std::vector<double> cv(dir.size());
      double lin = e0;
      for (std::size_t k = 0; k < dir.size(); ++k) {
        cv[k] = scale * dir[k] / len;
        lin -= cv[k] * g[k];
      }
      return std::abs(lin - problem.exact_energy(cv));
    };
    const double big = gap(1e-2);
    const double small = gap(5e-3);
    if (big < 1e-13) {
      c.passed = true;
      c.detail = "linear model exact along the probe (gap " + sci(big) + ")";
      return;
    }
    const double ratio = big / small;
    c.passed = ratio >= 3.5 && ratio <= 4.5;
    c.detail = "gap(1e-2) " + sci(big) + ", gap(5e-3) " + sci(small) + ", ratio " +
               format_double(ratio, "%.3f");
  }));

  checks.push_back(run_check("fci_variational", [&](CheckResult& c) {
    const FciResult fci = fci_ground_energy(h, static_cast<int>(occ.size()));
    const double ehf = hf_energy(spin, occ);
    c.passed = fci.energy <= ehf + 1e-10 && fci.residual < 1e-8;
    c.detail = "E_FCI " + format_double(fci.energy, "%.10f") + " <= E_HF " +
               format_double(ehf, "%.10f") + ", residual " + sci(fci.residual);
  }));
  return checks;
}

std::vector<CheckResult> cmd_verify(const std::filesystem::path& fcidump, const RunConfig& cfg) {
  FcidumpParseReport report;
  const MolecularSystem sys = load_fcidump(fcidump, FcidumpOptions{.strict = false}, &report);
  return verify_system(sys, static_cast<std::size_t>(report.conflicts), cfg);
}

int workers_from_environment() {
  const char* env = std::getenv("MRUCC_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int w = std::stoi(env);
    if (w < 1) throw std::invalid_argument(env);
    return w;
  } catch (const std::exception&) {
    throw ConfigError(std::string("MRUCC_WORKERS must be a positive integer, got '") + env + "'");
  }
}

}  // namespace mrucc
