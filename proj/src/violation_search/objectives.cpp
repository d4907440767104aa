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
#include <limits>

#include "lgswitch/errors.hpp"
#include "lgswitch/three_time.hpp"
#include "lgswitch/two_time.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw {

namespace {

double min_q2(const LGScenario& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : kTimePairs)
    for (Outcome a : kOutcomes)
      for (Outcome b : kOutcomes) best = std::min(best, mh_quasiprob(s, i, j, a, b).mh);
  return best;
}

double min_g2(const LGScenario& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : kTimePairs)
    for (Outcome a : kOutcomes)
      for (Outcome b : kOutcomes) best = std::min(best, g2(s, i, j, a, b));
  return best;
}

double min_k3(const LGScenario& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : k3_patterns()) best = std::min(best, k3(s, p.m1, p.m2, p.m3));
  return best;
}

double min_g3_form(const LGScenario& s, G3Form form) {
  const QuasiprobTable triple = triple_quasiprob(s);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : sign_triples()) best = std::min(best, g3(s, triple, p.m1, p.m2, p.m3, form));
  return best;
}

double min_q3(const LGScenario& s) { return triple_quasiprob(s).min_value(); }

// Negative exactly when some combination has both quasiprobabilities negative.
double min_combo(const LGScenario& s) {
  const QuasiprobTable triple = triple_quasiprob(s);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : k3_patterns()) {
    const ComboValues c = combo_inequality(triple, p.m1, p.m2, p.m3);
    best = std::min(best, std::max(c.first, c.second));
  }
  return best;
}

struct Entry {
  const char* name;
  double (*fn)(const LGScenario&);
};

const std::array<Entry, 7>& registry() {
  static const std::array<Entry, 7> r{{
      {"min_q2", min_q2},
      {"min_g2", min_g2},
      {"min_k3", min_k3},
      {"min_g3", [](const LGScenario& s) { return min_g3_form(s, G3Form::tripled_means); }},
      {"min_g3_moment", [](const LGScenario& s) { return min_g3_form(s, G3Form::moment_expansion); }},
      {"min_q3", min_q3},
      {"min_combo", min_combo},
  }};
  return r;
}

}  // namespace

std::vector<std::string> objective_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.emplace_back(e.name);
  return out;
}

Objective objective_by_name(std::string_view name) {
  for (const auto& e : registry())
    if (name == e.name) return {e.name, e.fn};
  std::string known;
  for (const auto& e : registry()) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw DomainError("unknown objective '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace lgsw
