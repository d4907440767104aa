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

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "lgswitch/errors.hpp"
#include "lgswitch/two_time.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw {

namespace {

struct SampleOutcome {
  double min_g2 = 0.0;
  double min_k3 = 0.0;
  double min_g3 = 0.0;
  double min_g3_moment = 0.0;
  double min_q2 = 0.0;
  double min_q3 = 0.0;
  std::array<ComboValues, 4> combo{};
};

SampleOutcome evaluate_sample(const ParamVector& p) {
  const LGScenario s = SearchSpace::scenario(p);
  const LgiEvaluation e = evaluate_inequalities(s);
  SampleOutcome o;
  o.min_g2 = e.min_g2();
  o.min_k3 = e.min_k3();
  o.min_g3 = e.min_g3();
  o.min_g3_moment = *std::min_element(e.g3_moment_expansion.begin(), e.g3_moment_expansion.end());
  o.min_q3 = e.triple.min_value();
  o.combo = e.combo;
  o.min_q2 = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : kTimePairs)
    for (Outcome a : kOutcomes)
      for (Outcome b : kOutcomes) o.min_q2 = std::min(o.min_q2, mh_quasiprob(s, i, j, a, b).mh);
  return o;
}

std::vector<ParamVector> draw_points(const SearchSpace& space, std::size_t samples,
                                     std::uint64_t seed) {
  if (samples == 0) throw DomainError("survey needs at least one sample");
  space.validate();
  Rng rng(seed);
  std::vector<ParamVector> points(samples);
  for (auto& p : points) p = sample_point(space, rng);
  return points;
}

SurveyReport tabulate(const std::vector<ParamVector>& points,
                      const std::vector<SampleOutcome>& outcomes, std::uint64_t seed) {
  SurveyReport r;
  r.samples = points.size();
  r.seed = seed;
  r.min_q2 = std::numeric_limits<double>::infinity();
  r.min_q3 = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < points.size(); ++n) {
    const SampleOutcome& o = outcomes[n];
    r.min_q2 = std::min(r.min_q2, o.min_q2);
    r.min_q3 = std::min(r.min_q3, o.min_q3);
    for (std::size_t k = 0; k < o.combo.size(); ++k) {
      if (!o.combo[k].both_negative) continue;
      ++r.both_negative_cases;
      if (o.min_k3 >= 0.0) r.counterexamples.push_back({n, points[n], k, o.combo[k], o.min_k3});
    }
    const bool lower_order_ok = o.min_g2 >= kWitnessMargin && o.min_k3 >= kWitnessMargin;
    if (lower_order_ok && o.min_g3 < -kWitnessMargin)
      r.g3_witnesses.push_back({n, points[n], o.min_g3, o.min_g2, o.min_k3});
    if (lower_order_ok && o.min_g3_moment < -kWitnessMargin) ++r.g3_moment_witnesses;
  }
  return r;
}

}  // namespace

ParamVector sample_point(const SearchSpace& space, Rng& rng) {
  ParamVector p = space.origin();
  for (Param q : space.free_params()) {
    const ParamRange& r = space.range(q);
    double& v = p[to_index(q)];
    if (q == Param::state_theta || q == Param::axis_theta) {
      v = std::acos(rng.uniform(std::cos(r.hi), std::cos(r.lo)));
      v = std::clamp(v, r.lo, r.hi);
    } else {
      v = rng.uniform(r.lo, r.hi);
    }
  }
  return space.constrain(p);
}

SurveyReport implication_survey_serial(const SearchSpace& space, std::size_t samples,
                                       std::uint64_t seed) {
  const auto points = draw_points(space, samples, seed);
  std::vector<SampleOutcome> outcomes(points.size());
  for (std::size_t n = 0; n < points.size(); ++n) outcomes[n] = evaluate_sample(points[n]);
  return tabulate(points, outcomes, seed);
}

SurveyReport implication_survey(const SearchSpace& space, std::size_t samples, std::uint64_t seed) {
  const auto points = draw_points(space, samples, seed);
  std::vector<SampleOutcome> outcomes(points.size());
  std::exception_ptr failure;
  const auto n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < n; ++k) {
    try {
      outcomes[static_cast<std::size_t>(k)] = evaluate_sample(points[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(lgsw_survey_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return tabulate(points, outcomes, seed);
}

}  // namespace lgsw
