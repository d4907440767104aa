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

#pragma once

// Result persistence: result.json, table.csv and manifest.json per run.
// Every float goes out with 12 significant digits and -0 printed as 0.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgswitch/linalg.hpp"
#include "lgswitch/search_space.hpp"

namespace lgsw::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

/// %.12g, with -0 as 0.
std::string format_number(double x);
/// x rounded to 12 significant digits; non-finite values become null.
Json number(double x);
Json complex_json(Complex z);
Json params_json(const ParamVector& p);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header = {}) : header_(std::move(header)) {}
  /// Throws DimensionError if the row width differs from the header.
  void add_row(std::vector<std::string> row);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

enum class Format { json, csv, both };
/// "json", "csv" or "both"; throws DomainError otherwise.
Format parse_format(const std::string& s);

struct RunOutput {
  Json result = Json::object();
  CsvTable table;
};

struct ManifestInfo {
  std::string command;
  std::string config_source;
  std::string config_text;
  std::uint64_t seed = 0;
};

/// Writes the selected outputs plus manifest.json into dir (created if
/// missing). The timestamp honours SOURCE_DATE_EPOCH when set. Returns the
/// data files written, in manifest order.
std::vector<std::string> write_run(const std::filesystem::path& dir, const ManifestInfo& info,
                                   const RunOutput& output, Format format);

}  // namespace lgsw::cli
