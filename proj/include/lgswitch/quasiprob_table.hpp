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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lgswitch/linalg.hpp"
#include "lgswitch/observable.hpp"

namespace lgsw {

/// Complex Kirkwood values over {+1,-1}^order with their real
/// (Margenau-Hill) parts. Positions are 1-based and follow time order.
///
/// Tuples are indexed with the first position as the most significant
/// bit and `+` as 0, so entries run (+,+), (+,-), (-,+), (-,-).
class QuasiprobTable {
 public:
  /// order must be 2 or 3.
  explicit QuasiprobTable(int order);

  int order() const { return order_; }
  std::size_t size() const { return values_.size(); }

  std::size_t index(std::initializer_list<Outcome> tuple) const;
  std::vector<Outcome> tuple(std::size_t index) const;

  void set(std::size_t index, Complex kirkwood) { values_.at(index) = kirkwood; }
  Complex kirkwood_at(std::size_t index) const { return values_.at(index); }
  double value_at(std::size_t index) const { return values_.at(index).real(); }

  Complex kirkwood(std::initializer_list<Outcome> tuple) const { return values_[index(tuple)]; }
  double value(std::initializer_list<Outcome> tuple) const { return values_[index(tuple)].real(); }

  double total() const;
  double min_value() const;

  /// Sum over every position except `position`, with that one fixed at m.
  double marginal(int position, Outcome m) const;
  /// Order-3 tables only: sum over the position not named.
  double pair_marginal(int pos_a, int pos_b, Outcome ma, Outcome mb) const;
  /// Sum of m_a m_b q over all tuples.
  double correlation(int pos_a, int pos_b) const;
  /// Order-3 tables only: sum of m1 m2 m3 q.
  double triple_moment() const;

 private:
  void require_position(int position) const;

  int order_;
  std::vector<Complex> values_;
};

}  // namespace lgsw
