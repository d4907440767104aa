// Copyright 2026 The lgswitch Authors
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

#include "lgswitch/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "lgswitch/digest.hpp"
#include "lgswitch/errors.hpp"

namespace lgsw::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << bytes;
  if (!out) throw Error("write failed for " + path.string());
}

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = std::strtoll(epoch, nullptr, 10);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_number(x).c_str(), nullptr);
}

Json complex_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json params_json(const ParamVector& p) {
  Json j = Json::object();
  for (std::size_t k = 0; k < kParamCount; ++k)
    j[std::string(param_name(static_cast<Param>(k)))] = number(p[k]);
  return j;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (!header_.empty() && row.size() != header_.size())
    throw DimensionError("csv row has " + std::to_string(row.size()) + " cells, header has " +
                         std::to_string(header_.size()));
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  if (!header_.empty()) line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "both") return Format::both;
  throw DomainError("format must be json, csv or both (got '" + s + "')");
}

std::vector<std::string> write_run(const std::filesystem::path& dir, const ManifestInfo& info,
                                   const RunOutput& output, Format format) {
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> files;
  if (format != Format::csv) files.emplace_back("result.json", output.result.dump(2) + "\n");
  if (format != Format::json) files.emplace_back("table.csv", output.table.str());

  Json manifest = Json::object();
  manifest["artifact"] = "lgswitch";
  manifest["version"] = kArtifactVersion;
  manifest["command"] = info.command;
  manifest["config"] = Json{{"source", info.config_source}, {"sha256", sha256_hex(info.config_text)}};
  manifest["seed"] = info.seed;
  manifest["timestamp"] = timestamp();
  Json listed = Json::array();
  std::vector<std::string> names;
  for (const auto& [name, bytes] : files) {
    write_file(dir / name, bytes);
    listed.push_back(Json{{"name", name}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}});
    names.push_back(name);
  }
  manifest["files"] = listed;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return names;
}

}  // namespace lgsw::cli
