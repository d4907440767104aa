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

#include "lgswitch/errors.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw {

namespace {

double move_within(const ParamRange& r, double x, double delta) {
  double v = x + delta;
  if (r.periodic) {
    const double width = r.hi - r.lo;
    v = r.lo + std::fmod(v - r.lo, width);
    if (v < r.lo) v += width;
    if (v >= r.hi) v = r.lo;
    return v;
  }
  return std::clamp(v, r.lo, r.hi);
}

}  // namespace

SearchResult refine(const SearchSpace& space, const Objective& objective, const ParamVector& start,
                    const RefineOptions& options) {
  space.validate();
  if (!space.contains(start)) throw DomainError("refine start point lies outside the search space");
  if (!(options.step > 0.0) || !(options.tol > 0.0) || options.budget == 0)
    throw DomainError("refine needs step > 0, tol > 0 and a nonzero budget");
  const auto params = space.free_params();
  if (params.empty()) throw DomainError("search space has no free parameters");

  SearchResult result;
  result.objective = objective.name;
  ParamVector x = start;
  double fx = objective.evaluate(SearchSpace::scenario(x));
  result.evaluations = 1;
  result.trace.push_back({1, fx, x});

  double step = options.step;
  for (;;) {
    if (step < options.tol) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.budget) {
      result.converged = false;
      break;
    }
    ParamVector best = x;
    double best_value = fx;
    for (Param p : params) {
      const ParamRange& r = space.range(p);
      for (double dir : {1.0, -1.0}) {
        if (result.evaluations >= options.budget) break;
        ParamVector candidate = x;
        candidate[to_index(p)] = move_within(r, x[to_index(p)], dir * step * (r.hi - r.lo));
        candidate = space.constrain(candidate);
        if (candidate == x) continue;
        const double v = objective.evaluate(SearchSpace::scenario(candidate));
        ++result.evaluations;
        if (v < best_value) {
          best_value = v;
          best = candidate;
        }
      }
    }
    if (best_value < fx) {
      x = best;
      fx = best_value;
      result.trace.push_back({result.evaluations, fx, x});
    } else {
      step /= 2.0;
    }
  }
  result.best_value = fx;
  result.best_params = x;
  result.final_step = step;
  return result;
}

bool revalidate(const Objective& objective, const SearchResult& result, double tol) {
  const double fresh = objective.evaluate(SearchSpace::scenario(result.best_params));
  return std::abs(fresh - result.best_value) <= tol;
}

}  // namespace lgsw
