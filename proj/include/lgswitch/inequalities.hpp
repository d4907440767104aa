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
#include <utility>

#include "lgswitch/observable.hpp"
#include "lgswitch/quasiprob_table.hpp"
#include "lgswitch/scenario.hpp"

namespace lgsw {

struct SignTriple {
  Outcome m1;
  Outcome m2;
  Outcome m3;
};

/// Pairs in reporting order: (1,2), (2,3), (1,3).
inline constexpr std::array<std::pair<int, int>, 3> kTimePairs{{{1, 2}, {2, 3}, {1, 3}}};

/// K3 is invariant under flipping all three signs; these are the four
/// distinct patterns, with m1 = +1.
const std::array<SignTriple, 4>& k3_patterns();
/// All eight sign triples in table order.
const std::array<SignTriple, 8>& sign_triples();

/// K3 = 1 + m1 m2 <M1M2> + m2 m3 <M2M3> + m1 m3 <M1M3>, with the sharp
/// symmetrized correlations; non-negative under macrorealism.
double k3(const LGScenario& s, Outcome m1, Outcome m2, Outcome m3);

/// Which coefficient multiplies the single moments in G3.
enum class G3Form {
  tripled_means,     // 3 * sum m_i <M_i>
  moment_expansion,  // 1 * sum m_i <M_i>; equals q(m1, m2, m3)
};

/// G3 = (1 + c sum m_i<M_i> + sum_{i<j} m_i m_j <M_i M_j> + m1 m2 m3 <M1M2M3>) / 8
/// with <M1M2M3> taken from the three-time quasiprobability.
double g3(const LGScenario& s, Outcome m1, Outcome m2, Outcome m3,
          G3Form form = G3Form::tripled_means);
/// Same, reusing a precomputed three-time table.
double g3(const LGScenario& s, const QuasiprobTable& triple, Outcome m1, Outcome m2, Outcome m3,
          G3Form form = G3Form::tripled_means);

/// q(m_i, -m_j, m_k) + q(-m_i, m_j, -m_k) >= 0.
struct ComboValues {
  double first = 0.0;
  double second = 0.0;
  double sum = 0.0;
  bool both_negative = false;
};

ComboValues combo_inequality(const QuasiprobTable& triple, Outcome m_i, Outcome m_j, Outcome m_k);
ComboValues combo_inequality(const LGScenario& s, Outcome m_i, Outcome m_j, Outcome m_k);

/// Every inequality of a scenario at once, in reporting order.
struct LgiEvaluation {
  std::array<double, 12> g2{};  // kTimePairs x (++, +-, -+, --)
  std::array<double, 4> k3{};   // k3_patterns()
  std::array<double, 8> g3{};   // sign_triples(), tripled-means form
  std::array<double, 8> g3_moment_expansion{};
  std::array<ComboValues, 4> combo{};  // k3_patterns() as (m_i, m_j, m_k)
  QuasiprobTable triple{3};

  double min_g2() const;
  double min_k3() const;
  double min_g3() const;
  bool any_combo_both_negative() const;
};

LgiEvaluation evaluate_inequalities(const LGScenario& s);

}  // namespace lgsw
