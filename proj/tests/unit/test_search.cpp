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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../support/generators.hpp"
#include "lgswitch/errors.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw {
namespace {

constexpr double kPi = std::numbers::pi;

// Minimum at state_theta = 1 with value 0.
Objective bowl() {
  return {"bowl", [](const LGScenario& s) {
            const double z = s.state().expectation(pauli_z());
            return (z - std::cos(1.0)) * (z - std::cos(1.0));
          }};
}

SearchSpace k3_line() {
  SearchSpace s;
  s.fix(Param::purity, 0).equal_spacing(true).release(Param::angle12);
  return s;
}

TEST(SearchSpace, DefaultsAndNames) {
  const SearchSpace s;
  EXPECT_TRUE(s.free_params().empty());
  EXPECT_DOUBLE_EQ(s.fixed_value(Param::purity), 1.0);
  EXPECT_DOUBLE_EQ(s.fixed_value(Param::angle12), kPi / 4);
  for (std::size_t k = 0; k < kParamCount; ++k) {
    const Param p = static_cast<Param>(k);
    EXPECT_EQ(param_from_name(param_name(p)), p);
  }
  EXPECT_FALSE(param_from_name("omega").has_value());
  EXPECT_THROW(objective_by_name("min_k4"), DomainError);
  for (const auto& n : objective_names()) EXPECT_EQ(objective_by_name(n).name, n);
}

TEST(SearchSpace, EqualSpacingTiesAngles) {
  SearchSpace s = k3_line();
  const auto free = s.free_params();
  ASSERT_EQ(free.size(), 1u);
  const double v[] = {0.7};
  const ParamVector p = s.point(v);
  EXPECT_DOUBLE_EQ(p[to_index(Param::angle23)], 0.7);
  EXPECT_TRUE(s.contains(p));
  ParamVector q = p;
  q[to_index(Param::angle23)] = 0.1;
  EXPECT_FALSE(s.contains(q));
  EXPECT_DOUBLE_EQ(s.constrain(q)[to_index(Param::angle23)], 0.7);
}

TEST(SearchSpace, ScenarioMapping) {
  ParamVector p = SearchSpace().origin();
  p[to_index(Param::state_theta)] = kPi / 2;
  p[to_index(Param::state_phi)] = 0;
  p[to_index(Param::purity)] = 0.5;
  const LGScenario s = SearchSpace::scenario(p);
  EXPECT_NEAR(s.state().expectation(pauli_x()), 0.5, 1e-12);
  EXPECT_NEAR(s.state().expectation(pauli_z()), 0.0, 1e-12);
  EXPECT_NEAR(s.observable(1).bloch()[2], 1.0, 1e-12);
  // y-axis precession by pi/4 tilts sigma_z toward x.
  EXPECT_NEAR(s.observable(2).bloch()[2], std::cos(kPi / 4), 1e-12);
}

TEST(SearchSpace, RejectsBadRanges) {
  SearchSpace s;
  s.release(Param::purity, 0.5, 1.5);
  EXPECT_THROW(s.validate(), DomainError);
  SearchSpace t;
  t.release(Param::angle12, 2, 1);
  EXPECT_THROW(t.validate(), DomainError);
}

TEST(GridSweep, ThirdTurnK3Minimum) {
  const SearchResult r = grid_sweep(k3_line(), objective_by_name("min_k3"), 720);
  EXPECT_NEAR(r.best_value, -0.5, 1e-12);
  EXPECT_NEAR(r.best_params[to_index(Param::angle12)], kPi / 3, 1e-12);
  EXPECT_EQ(r.evaluations, 720u);
  EXPECT_TRUE(revalidate(objective_by_name("min_k3"), r));
}

TEST(GridSweep, StaticLandscapeIsFlat) {
  SearchSpace s;
  s.fix(Param::angle12, 0).fix(Param::angle23, 0).release(Param::state_theta).release(Param::state_phi);
  const SearchResult r = grid_sweep(s, objective_by_name("min_k3"), 16);
  EXPECT_NEAR(r.best_value, 0.0, 1e-12);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace.front().evaluation, 1u);
  EXPECT_EQ(r.best_params, s.origin());
  for (const char* name : {"min_q2", "min_g2", "min_q3", "min_g3_moment", "min_combo"})
    EXPECT_GE(grid_sweep(s, objective_by_name(name), 8).best_value, -1e-12) << name;
}

TEST(GridSweep, SerialAndParallelAgreeExactly) {
  SearchSpace s;
  s.release(Param::state_theta).release(Param::angle12).release(Param::purity);
  for (const char* name : {"min_g3", "min_q2", "min_combo"}) {
    const Objective o = objective_by_name(name);
    const SearchResult a = grid_sweep(s, o, 17), b = grid_sweep_serial(s, o, 17);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_params, b.best_params);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) EXPECT_EQ(a.trace[k].evaluation, b.trace[k].evaluation);
  }
}

TEST(GridSweep, TraceIsStrictlyImproving) {
  SearchSpace s;
  s.release(Param::state_theta).release(Param::state_phi).release(Param::angle12);
  const SearchResult r = grid_sweep(s, objective_by_name("min_q3"), 12);
  for (std::size_t k = 1; k < r.trace.size(); ++k) {
    EXPECT_LT(r.trace[k].value, r.trace[k - 1].value - kTieTolerance);
    EXPECT_GT(r.trace[k].evaluation, r.trace[k - 1].evaluation);
  }
  EXPECT_EQ(r.trace.back().value, r.best_value);
}

TEST(GridSweep, RejectsDegenerateRequests) {
  EXPECT_THROW(grid_sweep(k3_line(), objective_by_name("min_k3"), 1), DomainError);
  EXPECT_THROW(grid_sweep(SearchSpace(), objective_by_name("min_k3"), 4), DomainError);
  SearchSpace huge;
  for (std::size_t k = 0; k < kParamCount; ++k) huge.release(static_cast<Param>(k));
  EXPECT_THROW(grid_sweep(huge, objective_by_name("min_k3"), 1000), DomainError);
}

TEST(Refine, FindsBowlMinimum) {
  SearchSpace s;
  s.release(Param::state_theta);
  const Objective o = bowl();
  ParamVector start = s.origin();
  start[to_index(Param::state_theta)] = 2.5;
  const SearchResult r = refine(s, o, start);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.final_step, 1e-9);
  EXPECT_NEAR(r.best_params[to_index(Param::state_theta)], 1.0, 1e-6);
  EXPECT_LT(r.best_value, 1e-12);
  for (std::size_t k = 1; k < r.trace.size(); ++k) EXPECT_LT(r.trace[k].value, r.trace[k - 1].value);
  EXPECT_TRUE(revalidate(o, r));
}

TEST(Refine, BudgetExhaustionIsReported) {
  SearchSpace s;
  s.release(Param::state_theta);
  RefineOptions opt;
  opt.budget = 5;
  const SearchResult r = refine(s, bowl(), s.origin(), opt);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 5u);
}

TEST(Refine, RejectsStartOutsideSpace) {
  SearchSpace s;
  s.release(Param::state_theta, 0.5, 1.5);
  ParamVector start = s.origin();
  start[to_index(Param::state_theta)] = 2.0;
  EXPECT_THROW(refine(s, bowl(), start), DomainError);
}

TEST(Refine, PolishesGridOptimumForMinimumQuasiprob) {
  SearchSpace s;
  s.equal_spacing(true).release(Param::state_theta).release(Param::state_phi).release(Param::angle12);
  const Objective o = objective_by_name("min_q2");
  const SearchResult g = grid_sweep(s, o, 24);
  RefineOptions opt;
  opt.step = 1.0 / 24;
  const SearchResult r = refine(s, o, g.best_params, opt);
  EXPECT_LE(r.best_value, g.best_value);
  EXPECT_NEAR(r.best_value, -0.125, 1e-9);
  EXPECT_TRUE(r.converged);
}

TEST(Survey, DeterministicAndParallelSafe) {
  SearchSpace s;
  s.release(Param::state_theta).release(Param::state_phi).release(Param::purity)
      .release(Param::axis_theta).release(Param::axis_phi).release(Param::angle12).release(Param::angle23);
  const SurveyReport a = implication_survey(s, 2000, 7);
  const SurveyReport b = implication_survey_serial(s, 2000, 7);
  const SurveyReport c = implication_survey(s, 2000, 8);
  EXPECT_EQ(a.both_negative_cases, b.both_negative_cases);
  EXPECT_EQ(a.g3_witnesses.size(), b.g3_witnesses.size());
  EXPECT_EQ(a.min_q3, b.min_q3);
  EXPECT_NE(a.min_q3, c.min_q3);
  EXPECT_TRUE(a.counterexamples.empty());
  EXPECT_GT(a.both_negative_cases, 0u);
  for (const auto& w : a.g3_witnesses) {
    EXPECT_LT(w.min_g3, -kWitnessMargin);
    EXPECT_GE(w.min_k3, kWitnessMargin);
  }
  EXPECT_THROW(implication_survey(s, 0, 1), DomainError);
}

TEST(Survey, SamplingStaysInsideSpace) {
  SearchSpace s;
  s.release(Param::state_theta, 0.2, 0.4).release(Param::lambda, 0.5, 1.0).release(Param::angle12);
  Rng rng(9);
  for (int n = 0; n < 1000; ++n) EXPECT_TRUE(s.contains(sample_point(s, rng)));
}

}  // namespace
}  // namespace lgsw
