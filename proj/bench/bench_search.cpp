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

#include <benchmark/benchmark.h>

#include "lgswitch/violation_search.hpp"

namespace {

using namespace lgsw;

SearchSpace k3_space() {
  SearchSpace s;
  s.fix(Param::purity, 0.0).release(Param::angle12).release(Param::angle23);
  return s;
}

SearchSpace survey_space() {
  SearchSpace s;
  for (std::size_t k = 0; k < kParamCount; ++k) s.release(static_cast<Param>(k));
  return s;
}

void BM_GridSerial(benchmark::State& state) {
  const auto space = k3_space();
  const auto obj = objective_by_name("min_g3");
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_sweep_serial(space, obj, static_cast<std::size_t>(state.range(0))));
}

void BM_GridParallel(benchmark::State& state) {
  const auto space = k3_space();
  const auto obj = objective_by_name("min_g3");
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_sweep(space, obj, static_cast<std::size_t>(state.range(0))));
}

void BM_SurveySerial(benchmark::State& state) {
  const auto space = survey_space();
  for (auto _ : state)
    benchmark::DoNotOptimize(implication_survey_serial(space, static_cast<std::size_t>(state.range(0)), 7));
}

void BM_SurveyParallel(benchmark::State& state) {
  const auto space = survey_space();
  for (auto _ : state)
    benchmark::DoNotOptimize(implication_survey(space, static_cast<std::size_t>(state.range(0)), 7));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveySerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveyParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
