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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "lgswitch/config.hpp"
#include "lgswitch/output.hpp"

namespace lgsw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitConfigError = 2;

inline constexpr std::uint64_t kDefaultSeed = 20260101;

RunOutput cmd_quasiprob(const RunConfig& config);
RunOutput cmd_lgi(const RunConfig& config);
RunOutput cmd_switch(const RunConfig& config);
RunOutput cmd_sweep(const RunConfig& config);

struct CommandOptions {
  std::string command;
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::string format = "both";
  std::optional<double> tolerance;  // verify only
};

/// Loads and validates the config, runs the command, writes the run
/// directory. Returns one of the exit codes above.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace lgsw::cli
