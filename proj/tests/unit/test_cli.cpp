// Copyright 2026 The anyonsim Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "anyonsim/cli/artifacts.hpp"
#include "anyonsim/cli/commands.hpp"
#include "anyonsim/cli/config.hpp"
#include "anyonsim/cli/pipeline.hpp"

namespace anyonsim::cli {
namespace {

namespace fs = std::filesystem;

fs::path source_dir() {
  const char* dir = std::getenv("ANYONSIM_SOURCE_DIR");
  return dir ? fs::path(dir) : fs::path(ANYONSIM_SOURCE_DIR);
}

std::string binary() {
  const char* bin = std::getenv("ANYONSIM_BINARY");
  return bin ? bin : ANYONSIM_BINARY;
}

fs::path configs() { return source_dir() / "configs"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("anyonsim_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& name, const nlohmann::json& j) {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump(2);
    return path;
  }

  // Runs the command-line binary; returns its exit code and captures stdout+stderr.
  int run_binary(const std::string& args, std::string* output = nullptr) {
    const auto log = dir_ / "console.txt";
    const std::string cmd = binary() + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) *output = slurp(log);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST_F(CliTest, LoadsDefaultConfig) {
  const auto cfg = load_config(configs() / "default.json");
  EXPECT_EQ(cfg.scenarios.size(), 4U);
  EXPECT_EQ(cfg.noise, nmr::NoiseModel::dephasing);
  EXPECT_EQ(cfg.checksum, sha256_hex(slurp(configs() / "default.json")));
  EXPECT_EQ(cfg.molecule.observe_spin, 6);
  EXPECT_EQ(cfg.effective_seeds(), std::vector<std::uint64_t>{1});
}

TEST_F(CliTest, ConfigErrors) {
  EXPECT_THROW(load_config(dir_ / "missing.json"), ConfigError);
  std::ofstream(dir_ / "broken.json") << "{ not json";
  EXPECT_THROW(load_config(dir_ / "broken.json"), ConfigError);
  EXPECT_THROW(config_from_json({{"scenarios", {"BD7"}}}, dir_), ConfigError);
  EXPECT_THROW(config_from_json({{"seeds", nlohmann::json::array()}}, dir_), ConfigError);
  EXPECT_THROW(config_from_json({{"gd_prefix", {{7, 7}}}}, dir_), ConfigError);
  EXPECT_THROW(config_from_json({{"loops", {{"BD1", {{"kind", "z_string"}, {"qubits", {1}}}}}}}, dir_), ConfigError);
}

TEST_F(CliTest, ConfigOverridesAndLoops) {
  const auto cfg = config_from_json({{"noise", "gate_imperfection"},
                                     {"seeds", {3, 4, 5}},
                                     {"gd_prefix", nlohmann::json::array()},
                                     {"loops", {{"BD1", {{"kind", "x_string"}, {"qubits", {1, 2, 3, 4}}}}}}},
                                    dir_);
  EXPECT_EQ(cfg.effective_seeds().size(), 3U);
  EXPECT_TRUE(cfg.gd_prefix.empty());
  const auto sc = cfg.scenario_config(nmr::Scenario::BD1, 4);
  ASSERT_TRUE(sc.loop.has_value());
  EXPECT_EQ(sc.loop->qubits(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(sc.rng_seed, 4U);
}

TEST_F(CliTest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, FitOffsetsAreSortedAndUnique) {
  const auto offsets = fit_offsets(nmr::default_molecule());
  EXPECT_EQ(offsets.size(), 64U);
  EXPECT_TRUE(std::is_sorted(offsets.begin(), offsets.end()));
  auto zero = nmr::default_molecule();
  zero.j.setZero();
  EXPECT_EQ(fit_offsets(zero).size(), 1U);
}

TEST_F(CliTest, VerifySuitePassesOnDefaultConfig) {
  const auto checks = verify_checks(load_config(configs() / "default.json"));
  EXPECT_GE(checks.size(), 10U);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST_F(CliTest, InProcessRunWritesArtifacts) {
  CommonOptions opts;
  opts.config = (configs() / "noiseless.json").string();
  opts.scenario = "BD1";
  opts.out = (dir_ / "out").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(opts, out, err), kExitOk) << err.str();
  const auto report = slurp(dir_ / "out" / "report.csv");
  EXPECT_NE(report.find("BD1,none,1,0.000000,"), std::string::npos) << report;
  EXPECT_NE(report.find(",180.000000,"), std::string::npos) << report;
  for (const char* f : {"BD1_s1_spectrum.csv", "BD1_s1_peaks.csv", "BD1_s1_spectrum.svg", "report.svg",
                        "reference_spectrum.csv", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }
  EXPECT_TRUE(slurp(dir_ / "out" / "BD1_s1_peaks.csv").starts_with("offset_hz,amplitude_re,amplitude_im,linewidth_hz\n"));
  EXPECT_TRUE(slurp(dir_ / "out" / "BD1_s1_spectrum.csv").starts_with("frequency_hz,real,imag\n"));
  const auto svg = slurp(dir_ / "out" / "BD1_s1_spectrum.svg");
  EXPECT_NE(svg.find(load_config(configs() / "noiseless.json").checksum), std::string::npos);
}

TEST_F(CliTest, ManifestListsEveryEmittedFile) {
  CommonOptions opts;
  opts.config = (configs() / "noiseless.json").string();
  opts.scenario = "BD0";
  opts.out = (dir_ / "out").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(opts, out, err), kExitOk) << err.str();
  const auto manifest = nlohmann::json::parse(slurp(dir_ / "out" / "manifest.json"));
  std::size_t listed = 0;
  for (const auto& f : manifest.at("files")) {
    const auto path = dir_ / "out" / f.at("path").get<std::string>();
    EXPECT_EQ(f.at("sha256").get<std::string>(), sha256_hex(slurp(path))) << path;
    ++listed;
  }
  std::size_t on_disk = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "out")) on_disk += entry.path().filename() != "manifest.json";
  EXPECT_EQ(listed, on_disk);
}

TEST_F(CliTest, BinaryExitCodes) {
  ASSERT_TRUE(fs::exists(binary())) << binary();
  std::string text;
  EXPECT_EQ(run_binary("run --config " + (configs() / "noiseless.json").string() + " --scenario BD9 --out " +
                           (dir_ / "o").string(),
                       &text),
            2);
  EXPECT_NE(text.find("Usage"), std::string::npos) << text;

  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("run --config " + (dir_ / "nope.json").string()), 2);

  auto molecule = nlohmann::json::parse(slurp(configs() / "molecule_default.json"));
  molecule["t2"][6] = 0.0;
  const auto t2_zero = write_config("t2_zero.json", {{"molecule", molecule}});
  EXPECT_EQ(run_binary("verify --config " + t2_zero.string(), &text), 2);
  EXPECT_NE(text.find("T2 > 0"), std::string::npos) << text;

  const auto bad = write_config("bad.json", {{"lattice", (configs() / "lattices" / "bad_noncommuting.json").string()},
                                             {"molecule", (configs() / "molecule_default.json").string()}});
  EXPECT_EQ(run_binary("verify --config " + bad.string(), &text), 1);
  EXPECT_NE(text.find("FAIL"), std::string::npos) << text;
  EXPECT_NE(text.find("anticommutes"), std::string::npos) << text;

  EXPECT_EQ(run_binary("verify --config " + (configs() / "default.json").string(), &text), 0) << text;

  nlohmann::json six = {{"nu", std::vector<double>(6, 0.0)},
                        {"t1", std::vector<double>(6, 5.0)},
                        {"t2", std::vector<double>(6, 3.0)},
                        {"observe_spin", 6}};
  std::vector<std::vector<double>> j(6, std::vector<double>(6, 0.0));
  for (int s = 0; s < 5; ++s) j[static_cast<std::size_t>(s)][5] = j[5][static_cast<std::size_t>(s)] = 10.0 * (s + 1);
  six["j"] = j;
  const auto six_spin = write_config("six.json", {{"molecule", six}});
  EXPECT_EQ(run_binary("run --config " + six_spin.string() + " --scenario BD1 --out " + (dir_ / "o6").string(), &text),
            3);
  EXPECT_NE(text.find("contract violation"), std::string::npos) << text;
}

TEST_F(CliTest, BinaryRunsAreByteIdentical) {
  ASSERT_TRUE(fs::exists(binary())) << binary();
  const auto cfg = write_config("gate.json", {{"lattice", (configs() / "lattices" / "seven_qubit.json").string()},
                                              {"molecule", (configs() / "molecule_default.json").string()},
                                              {"scenarios", {"BD1", "BD0"}},
                                              {"noise", "both"},
                                              {"seeds", {5, 6}}});
  for (const char* out : {"a", "b"}) {
    ASSERT_EQ(run_binary("run --config " + cfg.string() + " --out " + (dir_ / out).string()), 0);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    if (entry.path().filename() == "manifest.json") continue;
    const auto other = dir_ / "b" / entry.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
    ++compared;
  }
  EXPECT_GT(compared, 10U);
  const auto a = nlohmann::json::parse(slurp(dir_ / "a" / "manifest.json"));
  const auto b = nlohmann::json::parse(slurp(dir_ / "b" / "manifest.json"));
  EXPECT_EQ(a.at("files"), b.at("files"));
}

TEST_F(CliTest, SweepWritesOneRowPerValue) {
  CommonOptions opts;
  opts.config = (configs() / "noiseless.json").string();
  opts.scenario = "BD1";
  opts.out = (dir_ / "sweep").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(opts, "gate_fidelity", {1.0, 0.99}, out, err), kExitOk) << err.str();
  const auto csv = slurp(dir_ / "sweep" / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("gate_fidelity,1,BD1,1,0.000000,1.000000,180.000000"), std::string::npos) << csv;
  EXPECT_EQ(cmd_sweep(opts, "temperature", {1.0}, out, err), kExitUsage);
}

TEST_F(CliTest, SweepT2ScaleIsMonotone) {
  CommonOptions opts;
  opts.config = (configs() / "default.json").string();
  opts.scenario = "BD2";
  opts.out = (dir_ / "sweep").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(opts, "t2_scale", {1.0, 0.5, 0.25}, out, err), kExitOk) << err.str();
  std::istringstream csv(slurp(dir_ / "sweep" / "sweep.csv"));
  std::string line;
  std::getline(csv, line);
  double previous = 180.0;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    const double theta = std::stod(fields.at(6));
    EXPECT_LE(theta, previous);
    previous = theta;
  }
}

}  // namespace
}  // namespace anyonsim::cli
