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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrucc/integrals.hpp"
#include "mrucc/variational.hpp"

namespace mrucc {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ManifestEntry {
  std::optional<double> bond_length;  // angstrom; absent for bare inputs
  std::filesystem::path path;
};

/**
 * One `<R_angstrom> <path>` pair per line; blank lines and `#` comments are
 * skipped. Relative paths resolve against the manifest's directory. Throws
 * ConfigError if the manifest is empty, R is not strictly increasing, or a
 * file is missing.
 */
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);
std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                          const std::filesystem::path& base_dir);

enum class OutputFormat { kCsv, kJson };
OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
  std::vector<ManifestEntry> inputs;
  /// Molecule profile name; matched from the integrals when empty.
  std::string profile;
  std::string schedule;        // overrides the profile schedule if set
  std::optional<int> budget;   // overrides any budget in the schedule
  SpinOrdering ordering = SpinOrdering::kInterleaved;
  AdamConfig stage1 = AdamConfig::stage1_defaults();
  Stage2Config stage2;
  /// Stops stage 2 at |E - E_FCI| < stage2.stop.reference_threshold.
  bool fci_reference_stop = false;
  std::uint64_t seed = 7;
  int workers = 1;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::filesystem::path> out;
  bool keep_history = true;

  void validate() const;
};

/// Schedule text for a register: explicit schedule, else profile, else generic.
std::string resolve_schedule(const RunConfig& cfg, int n_spatial, int n_electrons);

struct PointResult {
  std::optional<double> bond_length;
  std::string file;
  bool ok = false;
  std::string error;

  int n_qubits = 0;
  int n_electrons = 0;
  std::string schedule;
  std::size_t params = 0;
  std::size_t cnots = 0;
  std::size_t pool_size = 0;
  std::size_t determinants = 0;
  double e_hf = 0.0;
  double e_mr = 0.0;
  double e_mruccsd = 0.0;  // exact re-evaluation at c*
  double e_bch = 0.0;      // stage-2 model energy at c*
  double e_fci = 0.0;
  std::string stop_reason;
  std::uint64_t seed = 0;
  std::vector<IterationRecord> stage1_history;
  std::vector<Stage2Record> stage2_history;

  double err_hf() const { return e_hf - e_fci; }
  double err_mr() const { return e_mr - e_fci; }
  double err_mruccsd() const { return e_mruccsd - e_fci; }
};

/// Full pipeline for one integral file; failures are captured in the result.
PointResult run_point(const ManifestEntry& entry, const RunConfig& cfg);

/// Rows in input order; uses cfg.workers threads.
std::vector<PointResult> cmd_energies(const RunConfig& cfg);

inline constexpr const char* kCsvHeader =
    "R,E_HF,E_MR,E_MRUCCSD,E_FCI,err_HF,err_MR,err_MRUCCSD,params,cnots,stop_reason,seed";

void write_csv(std::ostream& out, const std::vector<PointResult>& rows);
void write_json(std::ostream& out, const RunConfig& cfg, const std::vector<PointResult>& rows);

struct ResourceReport {
  int n_qubits = 0;
  std::size_t gates = 0;
  std::size_t params = 0;
  std::size_t cnots = 0;
  std::string schedule;
};

ResourceReport cmd_resources(int n_qubits, const std::string& schedule);
ResourceReport cmd_resources(const std::string& profile, const std::string& schedule = "",
                             std::optional<int> budget = std::nullopt);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/**
 * @brief Invariant checks on one integral file.
 *
 * The file is parsed leniently so that broken symmetry is reported by the
 * checks rather than rejected by the parser.
 */
std::vector<CheckResult> cmd_verify(const std::filesystem::path& fcidump, const RunConfig& cfg);
std::vector<CheckResult> verify_system(const MolecularSystem& sys, std::size_t parse_conflicts,
                                       const RunConfig& cfg);

/// Worker count from MRUCC_WORKERS, else 1.
int workers_from_environment();

}  // namespace mrucc
