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

// Run configuration: a small TOML subset.
//
//   # comment
//   [section]
//   key = 1.5            numbers, with pi and * / allowed: pi/3, 2*pi/3, -pi
//   key = "text"
//   key = true
//   key = [0, 1, 0]      arrays of numbers or strings
//
// The whole file is validated before any computation; every diagnostic
// carries the offending line number.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgswitch/errors.hpp"
#include "lgswitch/scenario.hpp"
#include "lgswitch/search_space.hpp"
#include "lgswitch/switch_sim.hpp"

namespace lgsw::cli {

class ConfigError : public Error {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct StateBlock {
  double theta = 0.0;
  double phi = 0.0;
  double purity = 1.0;
};

struct HamiltonianBlock {
  BlochVector axis{0.0, 1.0, 0.0};
  double omega = 1.0;
};

struct TimesBlock {
  double t1 = 0.0;
  double t2 = 0.7853981633974483;
  double t3 = 1.5707963267948966;
};

struct SweepBlock {
  std::string objective = "min_k3";
  std::size_t resolution = 64;
  double tol = 1e-9;
  std::size_t budget = 100000;
  std::optional<double> step;  // defaults to 1 / resolution
  std::vector<Param> free{Param::angle12};
  bool equal_spacing = true;
};

struct SwitchBlock {
  BlochVector observable_i{0.0, 0.0, 1.0};
  BlochVector observable_j{0.0, 0.0, 1.0};
  Outcome m_i = Outcome::plus;
  Outcome m_j = Outcome::plus;
  Routing routing = Routing::polarizing_beam_splitter;
  bool pi_h_phases = true;
};

struct VerifyBlock {
  std::size_t scenarios = 1000;
  std::size_t survey_samples = 10000;
  std::optional<double> tolerance;  // overrides every invariant tolerance
};

struct RunConfig {
  StateBlock state;
  HamiltonianBlock hamiltonian;
  TimesBlock times;
  double lambda = 1.0;
  SweepBlock sweep;
  SwitchBlock switch_block;
  VerifyBlock verify;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;

  std::string source_name = "<defaults>";
  std::string source_text;  // raw bytes, for the manifest digest

  LGScenario scenario() const;
  /// Scenario block as fixed values, [sweep] free parameters released.
  SearchSpace search_space() const;
  SwitchConfig switch_config() const;
};

RunConfig parse_config(std::string_view text, const std::string& source_name = "<config>");
/// Throws ConfigError if the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace lgsw::cli
