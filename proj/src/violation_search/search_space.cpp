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

#include "lgswitch/search_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lgswitch/errors.hpp"

namespace lgsw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinLambda = 1e-6;

constexpr std::array<std::string_view, kParamCount> kNames{
    "state_theta", "state_phi", "purity", "axis_theta",
    "axis_phi",    "angle12",   "angle23", "lambda"};

bool finite(double x) { return std::isfinite(x); }

}  // namespace

std::string_view param_name(Param p) { return kNames[to_index(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kParamCount; ++k)
    if (kNames[k] == name) return static_cast<Param>(k);
  return std::nullopt;
}

ParamRange SearchSpace::natural_range(Param p) {
  switch (p) {
    case Param::state_theta:
    case Param::axis_theta:
      return {0.0, std::numbers::pi, false};
    case Param::state_phi:
    case Param::axis_phi:
    case Param::angle12:
    case Param::angle23:
      return {0.0, kTwoPi, true};
    case Param::purity:
      return {0.0, 1.0, false};
    case Param::lambda:
      return {kMinLambda, 1.0, false};
  }
  throw DomainError("unknown parameter");
}

SearchSpace::SearchSpace() {
  for (std::size_t k = 0; k < kParamCount; ++k) ranges_[k] = natural_range(static_cast<Param>(k));
  const double half_pi = std::numbers::pi / 2.0;
  const double quarter_pi = std::numbers::pi / 4.0;
  fixed_ = {0.0, 0.0, 1.0, half_pi, half_pi, quarter_pi, quarter_pi, 1.0};
}

SearchSpace& SearchSpace::fix(Param p, double value) {
  fixed_[to_index(p)] = value;
  free_[to_index(p)] = false;
  return *this;
}

SearchSpace& SearchSpace::release(Param p) {
  ranges_[to_index(p)] = natural_range(p);
  free_[to_index(p)] = true;
  return *this;
}

SearchSpace& SearchSpace::release(Param p, double lo, double hi) {
  const ParamRange nat = natural_range(p);
  // A sub-interval of a periodic parameter is searched as a closed interval.
  const bool full_period = nat.periodic && lo == nat.lo && hi == nat.hi;
  ranges_[to_index(p)] = {lo, hi, full_period};
  free_[to_index(p)] = true;
  return *this;
}

SearchSpace& SearchSpace::equal_spacing(bool on) {
  equal_spacing_ = on;
  return *this;
}

std::vector<Param> SearchSpace::free_params() const {
  std::vector<Param> out;
  for (std::size_t k = 0; k < kParamCount; ++k) {
    const auto p = static_cast<Param>(k);
    if (p == Param::angle23 && equal_spacing_) continue;
    if (free_[k]) out.push_back(p);
  }
  return out;
}

ParamVector SearchSpace::constrain(ParamVector p) const {
  for (std::size_t k = 0; k < kParamCount; ++k)
    if (!free_[k]) p[k] = fixed_[k];
  if (equal_spacing_) p[to_index(Param::angle23)] = p[to_index(Param::angle12)];
  return p;
}

ParamVector SearchSpace::point(std::span<const double> free_values) const {
  const auto params = free_params();
  if (free_values.size() != params.size())
    throw DimensionError("expected " + std::to_string(params.size()) + " free values, got " +
                         std::to_string(free_values.size()));
  ParamVector p = fixed_;
  for (std::size_t k = 0; k < params.size(); ++k) p[to_index(params[k])] = free_values[k];
  return constrain(p);
}

ParamVector SearchSpace::origin() const {
  ParamVector p = fixed_;
  for (Param q : free_params()) p[to_index(q)] = ranges_[to_index(q)].lo;
  return constrain(p);
}

void SearchSpace::validate() const {
  for (std::size_t k = 0; k < kParamCount; ++k) {
    const auto p = static_cast<Param>(k);
    if (p == Param::angle23 && equal_spacing_) continue;
    const ParamRange nat = natural_range(p);
    const std::string name(param_name(p));
    if (free_[k]) {
      const ParamRange& r = ranges_[k];
      if (!finite(r.lo) || !finite(r.hi) || r.lo > r.hi)
        throw DomainError("empty range for " + name);
      if (r.lo < nat.lo || r.hi > nat.hi)
        throw DomainError("range for " + name + " leaves its domain [" + std::to_string(nat.lo) +
                          ", " + std::to_string(nat.hi) + "]");
    } else {
      const double v = fixed_[k];
      if (!finite(v) || v < nat.lo || v > nat.hi)
        throw DomainError("fixed value for " + name + " outside [" + std::to_string(nat.lo) +
                          ", " + std::to_string(nat.hi) + "]");
    }
  }
}

bool SearchSpace::contains(const ParamVector& p) const {
  for (std::size_t k = 0; k < kParamCount; ++k) {
    const auto q = static_cast<Param>(k);
    if (q == Param::angle23 && equal_spacing_) {
      if (p[k] != p[to_index(Param::angle12)]) return false;
      continue;
    }
    if (!finite(p[k])) return false;
    if (!free_[k]) {
      if (p[k] != fixed_[k]) return false;
      continue;
    }
    const ParamRange& r = ranges_[k];
    if (p[k] < r.lo || p[k] > r.hi || (r.periodic && p[k] == r.hi)) return false;
  }
  return true;
}

LGScenario SearchSpace::scenario(const ParamVector& p) {
  auto at = [&](Param q) { return p[to_index(q)]; };
  const double st = at(Param::state_theta), sp = at(Param::state_phi);
  const double r = at(Param::purity);
  const BlochVector bloch{r * std::sin(st) * std::cos(sp), r * std::sin(st) * std::sin(sp),
                          r * std::cos(st)};
  const double at_ = at(Param::axis_theta), ap = at(Param::axis_phi);
  const BlochVector axis{std::sin(at_) * std::cos(ap), std::sin(at_) * std::sin(ap),
                         std::cos(at_)};
  const double a12 = at(Param::angle12);
  const MeasurementTimes times{0.0, a12, a12 + at(Param::angle23)};
  return LGScenario::precession(QuantumState::from_bloch(bloch), axis, 1.0, times,
                                DichotomicObservable({0, 0, 1}), at(Param::lambda));
}

}  // namespace lgsw
