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

#include "lgswitch/inequalities.hpp"

#include <algorithm>

#include "lgswitch/three_time.hpp"
#include "lgswitch/two_time.hpp"

namespace lgsw {

namespace {

constexpr Outcome P = Outcome::plus;
constexpr Outcome M = Outcome::minus;

}  // namespace

const std::array<SignTriple, 4>& k3_patterns() {
  static const std::array<SignTriple, 4> p{{{P, P, P}, {P, P, M}, {P, M, P}, {P, M, M}}};
  return p;
}

const std::array<SignTriple, 8>& sign_triples() {
  static const std::array<SignTriple, 8> p{
      {{P, P, P}, {P, P, M}, {P, M, P}, {P, M, M}, {M, P, P}, {M, P, M}, {M, M, P}, {M, M, M}}};
  return p;
}

double k3(const LGScenario& s, Outcome m1, Outcome m2, Outcome m3) {
  return 1.0 + sign(m1) * sign(m2) * symmetrized_correlation(s, 1, 2) +
         sign(m2) * sign(m3) * symmetrized_correlation(s, 2, 3) +
         sign(m1) * sign(m3) * symmetrized_correlation(s, 1, 3);
}

double g3(const LGScenario& s, const QuasiprobTable& triple, Outcome m1, Outcome m2, Outcome m3,
          G3Form form) {
  const double c = form == G3Form::tripled_means ? 3.0 : 1.0;
  const std::array<double, 3> m{sign(m1), sign(m2), sign(m3)};
  double singles = 0.0;
  for (int i = 1; i <= 3; ++i) {
    singles += m[static_cast<std::size_t>(i - 1)] * s.state().expectation(s.observable(i).matrix());
  }
  double pairs = 0.0;
  for (const auto& [i, j] : kTimePairs) {
    pairs += m[static_cast<std::size_t>(i - 1)] * m[static_cast<std::size_t>(j - 1)] *
             symmetrized_correlation(s, i, j);
  }
  return (1.0 + c * singles + pairs + m[0] * m[1] * m[2] * triple.triple_moment()) / 8.0;
}

double g3(const LGScenario& s, Outcome m1, Outcome m2, Outcome m3, G3Form form) {
  return g3(s, triple_quasiprob(s), m1, m2, m3, form);
}

ComboValues combo_inequality(const QuasiprobTable& triple, Outcome m_i, Outcome m_j, Outcome m_k) {
  ComboValues c;
  c.first = triple.value({m_i, flip(m_j), m_k});
  c.second = triple.value({flip(m_i), m_j, flip(m_k)});
  c.sum = c.first + c.second;
  c.both_negative = c.first < 0.0 && c.second < 0.0;
  return c;
}

ComboValues combo_inequality(const LGScenario& s, Outcome m_i, Outcome m_j, Outcome m_k) {
  return combo_inequality(triple_quasiprob(s), m_i, m_j, m_k);
}

double LgiEvaluation::min_g2() const { return *std::min_element(g2.begin(), g2.end()); }
double LgiEvaluation::min_k3() const { return *std::min_element(k3.begin(), k3.end()); }
double LgiEvaluation::min_g3() const { return *std::min_element(g3.begin(), g3.end()); }

bool LgiEvaluation::any_combo_both_negative() const {
  return std::any_of(combo.begin(), combo.end(), [](const ComboValues& c) { return c.both_negative; });
}

LgiEvaluation evaluate_inequalities(const LGScenario& s) {
  LgiEvaluation e;
  e.triple = triple_quasiprob(s);
  std::size_t n = 0;
  for (const auto& [i, j] : kTimePairs) {
    for (Outcome a : kOutcomes)
      for (Outcome b : kOutcomes) e.g2[n++] = g2(s, i, j, a, b);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& p = k3_patterns()[k];
    e.k3[k] = k3(s, p.m1, p.m2, p.m3);
    e.combo[k] = combo_inequality(e.triple, p.m1, p.m2, p.m3);
  }
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& p = sign_triples()[k];
    e.g3[k] = g3(s, e.triple, p.m1, p.m2, p.m3, G3Form::tripled_means);
    e.g3_moment_expansion[k] = g3(s, e.triple, p.m1, p.m2, p.m3, G3Form::moment_expansion);
  }
  return e;
}

}  // namespace lgsw
