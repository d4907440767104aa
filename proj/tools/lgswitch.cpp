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

#include <iostream>

#include <CLI11.hpp>

#include "lgswitch/commands.hpp"

int main(int argc, char** argv) {
  using lgsw::cli::CommandOptions;
  CLI::App app{"Leggett-Garg quasiprobabilities, inequalities and quantum-switch simulation"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string config, out;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"quasiprob", "two-time and three-time quasiprobability tables"},
      {"lgi", "G2, K3, G3 and combination inequalities with violation flags"},
      {"switch", "quantum-switch amplitudes, detector statistics and the recovered quasiprobability"},
      {"sweep", "grid sweep followed by pattern-search refinement"},
      {"verify", "invariant suite over built-in and seeded random scenarios"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config, "configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", out, "run directory");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--format", opts.format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    if (std::string(s.name) == "verify")
      sub->add_option("--tolerance", tolerance, "override every invariant tolerance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lgsw::cli::kExitConfigError;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    opts.command = sub->get_name();
    if (sub->count("--config")) opts.config = config;
    if (sub->count("--out")) opts.out = out;
    if (sub->count("--seed")) opts.seed = seed;
    if (sub->get_option_no_throw("--tolerance") && sub->count("--tolerance")) opts.tolerance = tolerance;
  }
  return lgsw::cli::run_command(opts, std::cout, std::cerr);
}
