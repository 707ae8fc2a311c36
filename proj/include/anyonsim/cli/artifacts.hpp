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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "anyonsim/analysis/report.hpp"
#include "anyonsim/nmr/spectrum.hpp"

namespace anyonsim::cli {

std::string sha256_hex(std::string_view bytes);

/// Writes through a temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// frequency_hz,real,imag
std::string spectrum_csv(const nmr::Spectrum& spectrum);
/// offset_hz,amplitude_re,amplitude_im,linewidth_hz
std::string peaks_csv(const nmr::Spectrum& spectrum);

struct Provenance {
  std::string config_path;
  std::string config_checksum;
  std::string seed;
};

std::string spectrum_svg(const nmr::Spectrum& spectrum, const std::string& title, const Provenance& provenance);
std::string report_svg(const std::vector<analysis::ReportRow>& rows, const Provenance& provenance);

/// Collects emitted files and writes manifest.json with their checksums.
class RunManifest {
 public:
  RunManifest(std::filesystem::path out_dir, std::string command, std::string config_path);

  void set_scenarios(std::vector<std::string> scenarios) { scenarios_ = std::move(scenarios); }
  void set_seeds(std::vector<std::uint64_t> seeds) { seeds_ = std::move(seeds); }
  /// Writes `name` under the output directory and records its checksum.
  void emit(const std::string& name, const std::string& contents);
  void write() const;

  const std::filesystem::path& out_dir() const { return out_dir_; }

 private:
  std::filesystem::path out_dir_;
  std::string command_;
  std::string config_path_;
  std::vector<std::string> scenarios_;
  std::vector<std::uint64_t> seeds_;
  std::vector<std::pair<std::string, std::string>> files_;
};

}  // namespace anyonsim::cli
