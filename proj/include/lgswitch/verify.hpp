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

// Invariant suite behind `lgswitch verify`.
//
// Invariant checks gate the exit code. Claim checks evaluate statements
// that are reported but may legitimately fail; they never change the exit
// code.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgswitch/output.hpp"
#include "lgswitch/search_space.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw::cli {

enum class Comparison { at_most, at_least };

struct CheckResult {
  std::string name;
  bool invariant = true;
  Comparison comparison = Comparison::at_most;
  double measured = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = false;
  std::optional<ParamVector> worst;  // scenario that produced `measured`
  std::string detail;
};

struct VerifySettings {
  std::uint64_t seed = 20260101;
  std::size_t scenarios = 1000;
  std::size_t survey_samples = 10000;
  std::optional<double> tolerance;  // replaces every at_most invariant tolerance
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  SurveyReport survey;
  VerifySettings settings;

  bool passed() const;
  /// One line per check plus a summary; byte-stable for equal settings.
  std::string text() const;
  Json json() const;
  CsvTable table() const;
};

VerifyReport run_verify(const VerifySettings& settings);

}  // namespace lgsw::cli
