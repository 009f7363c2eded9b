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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mrucc/pipeline.hpp"
#include "mrucc/profiles.hpp"
#include "test_support.hpp"

namespace mrucc {
namespace {

std::vector<ManifestEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_manifest(in, testing::fixture("h2"));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

TEST(Manifest, ParsesCommentsAndRelativePaths) {
  const auto m = parse("# grid\n\n0.74 H2_R0.74.fcidump  # eq\n1.50 H2_R1.50.fcidump\n");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_DOUBLE_EQ(*m[0].bond_length, 0.74);
  EXPECT_EQ(m[1].path, testing::fixture("h2") / "H2_R1.50.fcidump");
  EXPECT_EQ(read_manifest(testing::fixture("lih/manifest.txt")).size(), 6u);
}

TEST(Manifest, Errors) {
  EXPECT_THROW(parse(""), ConfigError);
  EXPECT_THROW(parse("# only comments\n"), ConfigError);
  EXPECT_THROW(parse("1.50 H2_R1.50.fcidump\n0.74 H2_R0.74.fcidump\n"), ConfigError);
  EXPECT_THROW(parse("0.74 H2_R0.74.fcidump\n0.74 H2_R1.50.fcidump\n"), ConfigError);
  EXPECT_THROW(parse("0.74 missing.fcidump\n"), ConfigError);
  EXPECT_THROW(parse("abc H2_R0.74.fcidump\n"), ConfigError);
  EXPECT_THROW(parse("-1 H2_R0.74.fcidump\n"), ConfigError);
  EXPECT_THROW(parse("0.74\n"), ConfigError);
  EXPECT_THROW(parse("0.74 H2_R0.74.fcidump extra\n"), ConfigError);
  EXPECT_THROW(read_manifest("/nonexistent/manifest.txt"), ConfigError);
}

TEST(Config, ParsersAndValidation) {
  EXPECT_EQ(parse_output_format("json"), OutputFormat::kJson);
  EXPECT_THROW(parse_output_format("xml"), ConfigError);
  RunConfig cfg;
  cfg.inputs = {{std::nullopt, testing::fixture("h2/H2_R0.74.fcidump")}};
  EXPECT_NO_THROW(cfg.validate());
  cfg.workers = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Config, ScheduleResolution) {
  RunConfig cfg;
  EXPECT_EQ(resolve_schedule(cfg, 6, 4), find_profile("LiH").schedule);
  EXPECT_EQ(resolve_schedule(cfg, 2, 2), std::string(kGenericSchedule));
  cfg.profile = "BeH2";
  EXPECT_EQ(resolve_schedule(cfg, 2, 2), find_profile("BeH2").schedule);
  cfg.schedule = "adjacent";
  EXPECT_EQ(resolve_schedule(cfg, 6, 4), "adjacent");
  EXPECT_THROW(find_profile("N2"), std::invalid_argument);
}

TEST(Resources, ProfileCounts) {
  const auto lih = cmd_resources("lih");
  EXPECT_EQ(lih.n_qubits, 12);
  EXPECT_EQ(lih.params, 54u);
  EXPECT_EQ(lih.cnots, 108u);
  const auto h6 = cmd_resources("H6");
  EXPECT_EQ(h6.params, 260u);
  EXPECT_EQ(h6.cnots, 520u);
  const auto beh2 = cmd_resources("BeH2");
  EXPECT_EQ(beh2.n_qubits, 14);
  EXPECT_EQ(beh2.params, 198u);
  EXPECT_EQ(beh2.cnots, 396u);
  EXPECT_EQ(cmd_resources("LiH", "", 10).params, 10u);
  EXPECT_EQ(cmd_resources(4, "adjacent").cnots, 6u);
}

TEST(Energies, H2ManifestRun) {
  RunConfig cfg;
  cfg.inputs = read_manifest(testing::fixture("h2/manifest.txt"));
  const auto rows = cmd_energies(cfg);
  const auto ref = testing::reference_points("h2");
  ASSERT_EQ(rows.size(), 2u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    ASSERT_TRUE(r.ok) << r.error;
    EXPECT_DOUBLE_EQ(*r.bond_length, ref[k].r);
    EXPECT_NEAR(r.e_hf, ref[k].e_hf, 1e-8);
    EXPECT_NEAR(r.e_fci, ref[k].e_fci, 1e-7);
    EXPECT_GE(r.err_mruccsd(), -1e-10);
    EXPECT_LT(r.err_mruccsd(), 1e-6);
    EXPECT_LE(r.err_mruccsd(), r.err_mr() + 1e-12);
    EXPECT_EQ(r.cnots, 2 * r.params);
  }
  std::ostringstream csv;
  write_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kCsvHeader);
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(split(line, ',').size(), 12u) << line;
    ++n;
  }
  EXPECT_EQ(n, 2);

  std::ostringstream js;
  write_json(js, cfg, rows);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j.at("points").size(), 2u);
}

TEST(Energies, FailedPointIsReportedPerRow) {
  const auto bad = std::filesystem::temp_directory_path() / "mrucc_malformed.fcidump";
  {
    std::ofstream out(bad);
    out << "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n0.5 1 9 0 0\n";
  }
  RunConfig cfg;
  cfg.inputs = {{0.5, bad}, {0.74, testing::fixture("h2/H2_R0.74.fcidump")}};
  cfg.stage1.max_iterations = 50;
  cfg.stage2.adam.max_iterations = 5;
  const auto rows = cmd_energies(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].ok);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_TRUE(rows[1].ok);
  std::ostringstream csv;
  write_csv(csv, rows);
  EXPECT_NE(csv.str().find("failed"), std::string::npos);
  EXPECT_NE(csv.str().find("nan"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(Energies, WorkersKeepInputOrder) {
  RunConfig cfg;
  cfg.inputs = read_manifest(testing::fixture("h2/manifest.txt"));
  cfg.stage1.max_iterations = 100;
  cfg.stage2.adam.max_iterations = 10;
  const auto serial = cmd_energies(cfg);
  cfg.workers = 2;
  const auto parallel = cmd_energies(cfg);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].file, parallel[k].file);
    EXPECT_NEAR(serial[k].e_mruccsd, parallel[k].e_mruccsd, 1e-12);
  }
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

const CheckResult& find(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check named " + name);
}

TEST(Verify, H2Passes) {
  const auto checks = cmd_verify(testing::fixture("h2/H2_R0.74.fcidump"), RunConfig{});
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(all_pass(checks));
}

TEST(Verify, AsymmetricOneBodyFailsHermiticity) {
  auto sys = load_fcidump(testing::fixture("h2/H2_R0.74.fcidump"));
  sys.one(0, 1) = 0.1;
  sys.one(1, 0) = 0.3;
  const auto checks = verify_system(sys, 0, RunConfig{});
  EXPECT_FALSE(find(checks, "integral_symmetry").passed);
  EXPECT_FALSE(find(checks, "hamiltonian_hermitian").passed);
}

TEST(Verify, IdentityHamiltonianPasses) {
  auto sys = MolecularSystem::zeros(2, 2);
  sys.e_core = -0.5;
  const auto checks = verify_system(sys, 0, RunConfig{});
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace mrucc
