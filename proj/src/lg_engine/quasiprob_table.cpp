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

#include "lgswitch/quasiprob_table.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lgswitch/errors.hpp"

namespace lgsw {

QuasiprobTable::QuasiprobTable(int order) : order_(order) {
  if (order != 2 && order != 3) throw DomainError("quasiprobability tables have order 2 or 3");
  values_.assign(std::size_t{1} << order, Complex{});
}

std::size_t QuasiprobTable::index(std::initializer_list<Outcome> tuple) const {
  if (static_cast<int>(tuple.size()) != order_) {
    throw DimensionError("tuple length " + std::to_string(tuple.size()) + " for a table of order " +
                         std::to_string(order_));
  }
  std::size_t idx = 0;
  for (Outcome m : tuple) idx = (idx << 1) | static_cast<std::size_t>(bit(m));
  return idx;
}

std::vector<Outcome> QuasiprobTable::tuple(std::size_t index) const {
  std::vector<Outcome> out(static_cast<std::size_t>(order_));
  for (int p = 0; p < order_; ++p) {
    const std::size_t shift = static_cast<std::size_t>(order_ - 1 - p);
    out[static_cast<std::size_t>(p)] = ((index >> shift) & 1u) ? Outcome::minus : Outcome::plus;
  }
  return out;
}

double QuasiprobTable::total() const {
  double s = 0.0;
  for (const auto& k : values_) s += k.real();
  return s;
}

double QuasiprobTable::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& k : values_) m = std::min(m, k.real());
  return m;
}

void QuasiprobTable::require_position(int position) const {
  if (position < 1 || position > order_) {
    throw DomainError("table position " + std::to_string(position) + " out of range");
  }
}

double QuasiprobTable::marginal(int position, Outcome m) const {
  require_position(position);
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (tuple(i)[static_cast<std::size_t>(position - 1)] == m) s += values_[i].real();
  }
  return s;
}

double QuasiprobTable::pair_marginal(int pos_a, int pos_b, Outcome ma, Outcome mb) const {
  if (order_ != 3) throw DomainError("pair marginals need an order-3 table");
  require_position(pos_a);
  require_position(pos_b);
  if (pos_a == pos_b) throw DomainError("pair marginal needs two distinct positions");
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto t = tuple(i);
    if (t[static_cast<std::size_t>(pos_a - 1)] == ma && t[static_cast<std::size_t>(pos_b - 1)] == mb) {
      s += values_[i].real();
    }
  }
  return s;
}

double QuasiprobTable::correlation(int pos_a, int pos_b) const {
  require_position(pos_a);
  require_position(pos_b);
  if (pos_a >= pos_b) throw DomainError("correlation positions must satisfy a < b");
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto t = tuple(i);
    s += sign(t[static_cast<std::size_t>(pos_a - 1)]) * sign(t[static_cast<std::size_t>(pos_b - 1)]) *
         values_[i].real();
  }
  return s;
}

double QuasiprobTable::triple_moment() const {
  if (order_ != 3) throw DomainError("triple moment needs an order-3 table");
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto t = tuple(i);
    s += sign(t[0]) * sign(t[1]) * sign(t[2]) * values_[i].real();
  }
  return s;
}

}  // namespace lgsw
