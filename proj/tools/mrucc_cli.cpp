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

// Batch front end: energies, resources and verify verbs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrucc/pipeline.hpp"
#include "mrucc/profiles.hpp"

namespace {

struct CliOptions {
  std::vector<std::string> inputs;
  std::string manifest;
  std::string profile;
  std::string schedule;
  std::optional<int> budget;
  std::string mode = "iterative";
  std::string ordering = "interleaved";
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "csv";
  std::optional<double> lr1, lr2, trust_radius, step_radius, energy_tol2, reference_threshold;
  std::optional<int> iters1, iters2;
  bool fci_stop = false;
  std::optional<int> qubits;
};

void add_common(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--profile", o.profile, "Molecule profile: LiH, H6 or BeH2");
  cmd->add_option("--schedule", o.schedule, "Layout schedule, e.g. '(adjacent,next_nearest)x3'");
  cmd->add_option("--budget", o.budget, "Parameter budget (truncates the layout)");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--ordering", o.ordering, "Spin ordering: interleaved or blocked");
}

void add_run_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--input", o.inputs, "FCIDUMP file(s)");
  cmd->add_option("--manifest", o.manifest, "Manifest of '<R> <path>' lines");
  cmd->add_option("--mode", o.mode, "Stage-2 mode: linear, iterative or exact");
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--lr1", o.lr1, "Stage-1 learning rate");
  cmd->add_option("--iters1", o.iters1, "Stage-1 iteration cap");
  cmd->add_option("--lr2", o.lr2, "Stage-2 learning rate");
  cmd->add_option("--iters2", o.iters2, "Stage-2 iteration cap");
  cmd->add_option("--energy-tol2", o.energy_tol2, "Stage-2 energy-window tolerance");
  cmd->add_option("--trust-radius", o.trust_radius, "Stage-2 bound on ||c||");
  cmd->add_option("--step-radius", o.step_radius, "Stage-2 per-step bound in iterative mode");
  cmd->add_flag("--fci-stop", o.fci_stop, "Stop stage 2 near the FCI energy");
  cmd->add_option("--reference-threshold", o.reference_threshold,
                  "Threshold for --fci-stop (Hartree)");
}

mrucc::RunConfig make_config(const CliOptions& o, bool need_inputs) {
  mrucc::RunConfig cfg;
  if (!o.manifest.empty()) cfg.inputs = mrucc::read_manifest(o.manifest);
  for (const auto& p : o.inputs) cfg.inputs.push_back({std::nullopt, p});
  if (need_inputs && cfg.inputs.empty()) {
    throw mrucc::ConfigError("give --input or --manifest");
  }
  cfg.profile = o.profile;
  cfg.schedule = o.schedule;
  cfg.budget = o.budget;
  cfg.ordering = mrucc::parse_spin_ordering(o.ordering);
  cfg.seed = o.seed;
  cfg.stage1.seed = o.seed;
  cfg.stage2.mode = mrucc::parse_stage2_mode(o.mode);
  if (o.lr1) cfg.stage1.learning_rate = *o.lr1;
  if (o.iters1) cfg.stage1.max_iterations = *o.iters1;
  if (o.lr2) cfg.stage2.adam.learning_rate = *o.lr2;
  if (o.iters2) cfg.stage2.adam.max_iterations = *o.iters2;
  if (o.energy_tol2) cfg.stage2.adam.energy_tol = *o.energy_tol2;
  if (o.trust_radius) cfg.stage2.stop.trust_radius = *o.trust_radius;
  if (o.step_radius) cfg.stage2.step_radius = *o.step_radius;
  if (o.reference_threshold) cfg.stage2.stop.reference_threshold = *o.reference_threshold;
  cfg.fci_reference_stop = o.fci_stop;
  cfg.format = mrucc::parse_output_format(o.format);
  if (!o.out.empty()) cfg.out = o.out;
  cfg.workers = mrucc::workers_from_environment();
  return cfg;
}

int run_energies(const CliOptions& o) {
  const mrucc::RunConfig cfg = make_config(o, true);
  const auto rows = mrucc::cmd_energies(cfg);
  std::ofstream file;
  if (cfg.out) {
    file.open(*cfg.out);
    if (!file) throw mrucc::ConfigError("cannot write " + cfg.out->string());
  }
  std::ostream& out = cfg.out ? static_cast<std::ostream&>(file) : std::cout;
  if (cfg.format == mrucc::OutputFormat::kCsv) {
    mrucc::write_csv(out, rows);
  } else {
    mrucc::write_json(out, cfg, rows);
  }
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++failed;
      std::cerr << "failed: " << r.file << ": " << r.error << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_resources(const CliOptions& o) {
  mrucc::ResourceReport rep;
  if (!o.profile.empty()) {
    rep = mrucc::cmd_resources(o.profile, o.schedule, o.budget);
  } else {
    if (!o.qubits) throw mrucc::ConfigError("give --profile or --qubits");
    mrucc::Schedule s = mrucc::parse_schedule(
        o.schedule.empty() ? std::string(mrucc::kGenericSchedule) : o.schedule);
    if (o.budget) s.budget = *o.budget;
    rep = mrucc::cmd_resources(*o.qubits, mrucc::to_string(s));
  }
  if (o.format == "json") {
    nlohmann::ordered_json j{{"qubits", rep.n_qubits},
                             {"gates", rep.gates},
                             {"params", rep.params},
                             {"cnots", rep.cnots},
                             {"schedule", rep.schedule}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "qubits " << rep.n_qubits << "\ngates " << rep.gates << "\nparams "
              << rep.params << "\ncnots " << rep.cnots << "\nschedule " << rep.schedule
              << '\n';
  }
  return 0;
}

int run_verify(const CliOptions& o) {
  const mrucc::RunConfig cfg = make_config(o, true);
  int failed = 0;
  for (const auto& in : cfg.inputs) {
    std::cout << "# " << in.path.string() << '\n';
    for (const auto& c : mrucc::cmd_verify(in.path, cfg)) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      if (!c.passed) ++failed;
    }
  }
  std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-reference UCCSD statevector simulator"};
  app.require_subcommand(1);
  CliOptions o;

  auto* energies = app.add_subcommand("energies", "HF, MR, MR-UCCSD and FCI energies per input");
  add_common(energies, o);
  add_run_options(energies, o);

  auto* resources = app.add_subcommand("resources", "Gate, parameter and CNOT counts");
  add_common(resources, o);
  resources->add_option("--qubits", o.qubits, "Register size when no profile is given");
  resources->add_option("--format", o.format, "text or json");

  auto* verify = app.add_subcommand("verify", "Invariant checks on integral files");
  add_common(verify, o);
  verify->add_option("--input", o.inputs, "FCIDUMP file(s)");
  verify->add_option("--manifest", o.manifest, "Manifest of '<R> <path>' lines");

  CLI11_PARSE(app, argc, argv);
  try {
    if (energies->parsed()) return run_energies(o);
    if (resources->parsed()) return run_resources(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const mrucc::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
