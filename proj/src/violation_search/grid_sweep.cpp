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
#include <exception>
#include <limits>
#include <string>

#include "lgswitch/errors.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw {

namespace {

constexpr std::size_t kMaxGridPoints = 100'000'000;
constexpr std::size_t kBlock = 4096;

class Grid {
 public:
  Grid(const SearchSpace& space, std::size_t resolution) : space_(space), n_(resolution) {
    if (resolution < 2) throw DomainError("grid resolution must be at least 2");
    space.validate();
    params_ = space.free_params();
    if (params_.empty()) throw DomainError("search space has no free parameters");
    total_ = 1;
    for (std::size_t d = 0; d < params_.size(); ++d) {
      if (total_ > kMaxGridPoints / n_)
        throw DomainError("grid of " + std::to_string(n_) + "^" + std::to_string(params_.size()) +
                          " points is too large");
      total_ *= n_;
    }
    axes_.resize(params_.size());
    for (std::size_t d = 0; d < params_.size(); ++d) {
      const ParamRange& r = space.range(params_[d]);
      const double denom = static_cast<double>(r.periodic ? n_ : n_ - 1);
      for (std::size_t k = 0; k < n_; ++k)
        axes_[d].push_back(r.lo + static_cast<double>(k) * (r.hi - r.lo) / denom);
    }
  }

  std::size_t size() const { return total_; }

  // First free parameter varies slowest.
  ParamVector point(std::size_t index) const {
    std::vector<double> values(params_.size());
    for (std::size_t d = params_.size(); d-- > 0;) {
      values[d] = axes_[d][index % n_];
      index /= n_;
    }
    return space_.point(values);
  }

 private:
  const SearchSpace& space_;
  std::size_t n_;
  std::vector<Param> params_;
  std::vector<std::vector<double>> axes_;
  std::size_t total_ = 0;
};

class Scan {
 public:
  explicit Scan(std::string objective) { result_.objective = std::move(objective); }

  void observe(std::size_t index, double value, const ParamVector& p) {
    ++result_.evaluations;
    if (index == 0 || value < result_.best_value - kTieTolerance) {
      result_.best_value = value;
      result_.best_params = p;
      result_.trace.push_back({result_.evaluations, value, p});
    }
  }

  SearchResult finish() { return std::move(result_); }

 private:
  SearchResult result_;
};

}  // namespace

SearchResult grid_sweep_serial(const SearchSpace& space, const Objective& objective,
                               std::size_t resolution) {
  const Grid grid(space, resolution);
  Scan scan(objective.name);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ParamVector p = grid.point(i);
    scan.observe(i, objective.evaluate(SearchSpace::scenario(p)), p);
  }
  return scan.finish();
}

SearchResult grid_sweep(const SearchSpace& space, const Objective& objective,
                        std::size_t resolution) {
  const Grid grid(space, resolution);
  Scan scan(objective.name);
  std::vector<double> values(kBlock);
  for (std::size_t start = 0; start < grid.size(); start += kBlock) {
    const std::size_t count = std::min(kBlock, grid.size() - start);
    std::exception_ptr failure;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < n; ++k) {
      try {
        const ParamVector p = grid.point(start + static_cast<std::size_t>(k));
        values[static_cast<std::size_t>(k)] = objective.evaluate(SearchSpace::scenario(p));
      } catch (...) {
#pragma omp critical(lgsw_grid_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    // The reduction runs in index order so the tie-break matches the serial scan.
    for (std::size_t k = 0; k < count; ++k) scan.observe(start + k, values[k], grid.point(start + k));
  }
  return scan.finish();
}

}  // namespace lgsw
