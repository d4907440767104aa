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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lgswitch/scenario.hpp"

namespace lgsw {

/// Parameters of the qubit scenario family explored by the search:
/// state Bloch angles and purity, precession axis angles, the two
/// dimensionless evolution angles omega*(t2-t1), omega*(t3-t2), and lambda.
enum class Param : std::size_t {
  state_theta,
  state_phi,
  purity,
  axis_theta,
  axis_phi,
  angle12,
  angle23,
  lambda,
};

inline constexpr std::size_t kParamCount = 8;
using ParamVector = std::array<double, kParamCount>;

constexpr std::size_t to_index(Param p) { return static_cast<std::size_t>(p); }
std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
  bool periodic = false;  // [lo, hi) wraps; otherwise [lo, hi]
};

/// Each parameter is either fixed or free within a range. The measured
/// observable at t1 is sigma_z and the Hamiltonian is (1/2) axis.sigma.
class SearchSpace {
 public:
  /// Every parameter fixed: pure |0> state, y-axis precession,
  /// angles pi/4, lambda = 1.
  SearchSpace();

  /// Natural domain of a parameter.
  static ParamRange natural_range(Param p);

  SearchSpace& fix(Param p, double value);
  /// Free over the natural domain.
  SearchSpace& release(Param p);
  SearchSpace& release(Param p, double lo, double hi);
  /// angle23 follows angle12.
  SearchSpace& equal_spacing(bool on);

  bool is_free(Param p) const { return free_[to_index(p)]; }
  bool equal_spacing() const { return equal_spacing_; }
  const ParamRange& range(Param p) const { return ranges_[to_index(p)]; }
  double fixed_value(Param p) const { return fixed_[to_index(p)]; }

  /// Free parameters in Param order; angle23 is excluded under equal spacing.
  std::vector<Param> free_params() const;

  /// Full parameter vector from values for free_params().
  ParamVector point(std::span<const double> free_values) const;
  /// Fixed values everywhere, free ones at the lower bound.
  ParamVector origin() const;
  /// Re-imposes fixed values and equal spacing on p.
  ParamVector constrain(ParamVector p) const;

  /// Throws DomainError for a range outside the natural domain or lo > hi.
  void validate() const;
  bool contains(const ParamVector& p) const;

  static LGScenario scenario(const ParamVector& p);

 private:
  std::array<ParamRange, kParamCount> ranges_;
  std::array<double, kParamCount> fixed_;
  std::array<bool, kParamCount> free_{};
  bool equal_spacing_ = false;
};

}  // namespace lgsw
