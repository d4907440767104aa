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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lgswitch/inequalities.hpp"
#include "lgswitch/random.hpp"
#include "lgswitch/search_space.hpp"

namespace lgsw {

struct Objective {
  std::string name;
  std::function<double(const LGScenario&)> evaluate;
};

/// min_q2, min_g2, min_k3, min_g3, min_g3_moment, min_q3, min_combo.
/// Throws DomainError for unknown names.
Objective objective_by_name(std::string_view name);
std::vector<std::string> objective_names();

struct TraceEntry {
  std::size_t evaluation = 0;
  double value = 0.0;
  ParamVector params{};
};

struct SearchResult {
  std::string objective;
  double best_value = 0.0;
  ParamVector best_params{};
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;  // each strict improvement, in order
  bool converged = true;
  double final_step = 0.0;
};

/// Values within this of the incumbent count as ties; ties keep the point
/// that comes first in lexicographic grid order.
inline constexpr double kTieTolerance = 1e-12;

/// Deterministic lexicographic scan, first free parameter slowest.
/// Periodic dimensions use `resolution` points spaced over [lo, hi),
/// closed ones include both ends. Throws DomainError for resolution < 2,
/// an invalid space, or no free parameters.
SearchResult grid_sweep(const SearchSpace& space, const Objective& objective,
                        std::size_t resolution);
/// Single-threaded reference; identical results to grid_sweep.
SearchResult grid_sweep_serial(const SearchSpace& space, const Objective& objective,
                               std::size_t resolution);

struct RefineOptions {
  double step = 0.05;  // initial step, as a fraction of each range
  double tol = 1e-9;
  std::size_t budget = 100000;
};

/// Coordinate pattern search: probe +-step along every free parameter,
/// move to the best strict improvement, halve the step otherwise. Stops
/// when step < tol (converged) or the budget is used up (unconverged).
/// Throws DomainError if start lies outside the space.
SearchResult refine(const SearchSpace& space, const Objective& objective, const ParamVector& start,
                    const RefineOptions& options = {});

/// Fresh evaluation of the reported optimum reproduces the reported value.
bool revalidate(const Objective& objective, const SearchResult& result, double tol = 1e-12);

/// Draws a point: Bloch polar angles uniform in cos(theta) within their
/// range, everything else uniform.
ParamVector sample_point(const SearchSpace& space, Rng& rng);

struct SurveyCounterexample {
  std::size_t sample = 0;
  ParamVector params{};
  std::size_t pattern = 0;  // into k3_patterns()
  ComboValues combo;
  double min_k3 = 0.0;
};

struct SurveyWitness {
  std::size_t sample = 0;
  ParamVector params{};
  double min_g3 = 0.0;
  double min_g2 = 0.0;
  double min_k3 = 0.0;
};

struct SurveyReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t both_negative_cases = 0;
  std::vector<SurveyCounterexample> counterexamples;
  std::vector<SurveyWitness> g3_witnesses;  // G3 with tripled means
  std::size_t g3_moment_witnesses = 0;      // moment-expansion form
  double min_q2 = 0.0;
  double min_q3 = 0.0;
};

/// Witness margins: G3 < -kWitnessMargin with every G2 and K3 >= kWitnessMargin.
inline constexpr double kWitnessMargin = 1e-9;

/// Random scenarios from `space` (free parameters sampled, fixed ones kept).
/// Tabulates counterexamples to "both combination quasiprobabilities
/// negative implies some K3 < 0" and G3-only violations.
/// Throws DomainError for samples == 0.
SurveyReport implication_survey(const SearchSpace& space, std::size_t samples, std::uint64_t seed);
SurveyReport implication_survey_serial(const SearchSpace& space, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace lgsw
