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

#include "anyonsim/cli/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "anyonsim/errors.hpp"

namespace anyonsim::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

std::string provenance_comment(const Provenance& p) {
  return fmt::format("<!-- config: {} -->\n<!-- config-sha256: {} -->\n<!-- seed: {} -->\n", p.config_path,
                     p.config_checksum, p.seed);
}

std::string svg_open() {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight, kWidth, kHeight);
}

std::string num(double v) {
  std::string s = fmt::format("{:.9g}", v);
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ContractViolation("sha256 digest succeeds", "EVP_Digest failed");
  }
  std::string out;
  for (unsigned int k = 0; k < length; ++k) out += fmt::format("{:02x}", digest[k]);
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ContractViolation("output file is writable", tmp);
    out << contents;
    if (!out) throw ContractViolation("output file is writable", tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string spectrum_csv(const nmr::Spectrum& spectrum) {
  std::string out = "frequency_hz,real,imag\n";
  if (!spectrum.trace) return out;
  const auto& t = *spectrum.trace;
  for (std::size_t k = 0; k < t.frequency_hz.size(); ++k) {
    out += fmt::format("{},{},{}\n", num(t.frequency_hz[k]), num(t.real[k]), num(t.imag[k]));
  }
  return out;
}

std::string peaks_csv(const nmr::Spectrum& spectrum) {
  std::string out = "offset_hz,amplitude_re,amplitude_im,linewidth_hz\n";
  for (const auto& p : spectrum.peaks) {
    out += fmt::format("{},{},{},{}\n", num(p.offset_hz), num(p.amplitude.real()), num(p.amplitude.imag()),
                       num(p.linewidth_hz));
  }
  return out;
}

std::string spectrum_svg(const nmr::Spectrum& spectrum, const std::string& title, const Provenance& provenance) {
  std::string out = svg_open() + provenance_comment(provenance);
  out += fmt::format("<text x=\"{:.0f}\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">{}</text>\n", kMargin,
                     title);
  if (spectrum.trace && !spectrum.trace->frequency_hz.empty()) {
    const auto& t = *spectrum.trace;
    const auto [fmin, fmax] = std::minmax_element(t.frequency_hz.begin(), t.frequency_hz.end());
    double ymax = 1e-12;
    for (double v : t.real) ymax = std::max(ymax, std::abs(v));
    const double span = std::max(*fmax - *fmin, 1e-12);
    const double plot_w = kWidth - 2 * kMargin;
    const double half_h = (kHeight - 2 * kMargin) / 2;
    const double mid = kMargin + half_h;
    // Frequency axis runs high to low, as in NMR plots.
    auto x_of = [&](double f) { return kMargin + (*fmax - f) / span * plot_w; };
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#999\"/>\n", kMargin, mid,
                       kWidth - kMargin, mid);
    out += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < t.frequency_hz.size(); ++k) {
      out += fmt::format("{:.2f},{:.2f} ", x_of(t.frequency_hz[k]), mid - t.real[k] / ymax * half_h);
    }
    out += "\"/>\n";
    out += fmt::format(
        "<text x=\"{:.0f}\" y=\"{:.0f}\" font-family=\"sans-serif\" font-size=\"12\">{:.2f} Hz</text>\n"
        "<text x=\"{:.0f}\" y=\"{:.0f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">{:.2f} Hz</text>\n",
        kMargin, kHeight - 15, *fmax, kWidth - kMargin, kHeight - 15, *fmin);
  }
  out += "</svg>\n";
  return out;
}

std::string report_svg(const std::vector<analysis::ReportRow>& rows, const Provenance& provenance) {
  std::string out = svg_open() + provenance_comment(provenance);
  out += fmt::format("<text x=\"{:.0f}\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">anyonic phase (deg)</text>\n",
                     kMargin);
  const double plot_h = kHeight - 2 * kMargin - 20;
  const double base = kHeight - kMargin;
  const double slot = rows.empty() ? 0.0 : (kWidth - 2 * kMargin) / static_cast<double>(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    const double x = kMargin + slot * static_cast<double>(k);
    const double theta = std::clamp(r.result.theta_deg.value, 0.0, 180.0);
    const double h = theta / 180.0 * plot_h;
    const double theory_y = base - r.theory_deg / 180.0 * plot_h;
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", x + slot * 0.2,
                       base - h, slot * 0.6, h, r.pass ? "#3a7d44" : "#b23a48");
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n",
                       x + slot * 0.1, theory_y, x + slot * 0.9, theory_y);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{} {} {:.2f}</text>\n",
        x + slot * 0.5, base + 15, nmr::to_string(r.scenario), r.seed, r.result.theta_deg.value);
  }
  out += "</svg>\n";
  return out;
}

RunManifest::RunManifest(std::filesystem::path out_dir, std::string command, std::string config_path)
    : out_dir_(std::move(out_dir)), command_(std::move(command)), config_path_(std::move(config_path)) {
  std::filesystem::create_directories(out_dir_);
}

void RunManifest::emit(const std::string& name, const std::string& contents) {
  write_file_atomic(out_dir_ / name, contents);
  files_.emplace_back(name, sha256_hex(contents));
}

void RunManifest::write() const {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& [name, digest] : files_) files.push_back({{"path", name}, {"sha256", digest}});
  const nlohmann::json manifest = {{"command", command_},
                                   {"config", config_path_},
                                   {"scenarios", scenarios_},
                                   {"seeds", seeds_},
                                   {"output_dir", out_dir_.string()},
                                   {"files", files}};
  write_file_atomic(out_dir_ / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace anyonsim::cli
