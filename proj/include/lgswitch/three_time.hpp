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

// Three-time quasiprobability q(m1, m2, m3) = Re[<m1|m2><m2|rho|m3><m3|m1>]
// and its correlations and marginals.
//
// Normalization: no 1/2 prefactor, so the eight values sum to one and the
// single-time marginals reproduce the Born rule.

#include <array>
#include <cstddef>

#include "lgswitch/observable.hpp"
#include "lgswitch/quantum_state.hpp"
#include "lgswitch/quasiprob_table.hpp"
#include "lgswitch/scenario.hpp"

namespace lgsw {

QuasiprobTable triple_quasiprob(const QuantumState& state, const OutcomeBasis& b1,
                                const OutcomeBasis& b2, const OutcomeBasis& b3);
QuasiprobTable triple_quasiprob(const LGScenario& s);

/// Pure-state product form Re[k(m1,m3) k*(m2,m3)] / |<psi|m3>|^2 with
/// k(a,b) = <a|b><b|rho|a>. Throws DomainError for mixed states or when
/// |<psi|m3>| <= Tolerances::overlap.
double triple_quasiprob_pure_form_entry(const QuantumState& state, const OutcomeBasis& b1,
                                        const OutcomeBasis& b2, const OutcomeBasis& b3, Outcome m1,
                                        Outcome m2, Outcome m3);
/// Whole table; throws if any m3 has a vanishing overlap.
QuasiprobTable triple_quasiprob_pure_form(const QuantumState& state, const OutcomeBasis& b1,
                                          const OutcomeBasis& b2, const OutcomeBasis& b3);

/// The pure form is generally a different ordering of the three
/// projectors than the direct definition; this measures the gap.
struct PureFormComparison {
  QuasiprobTable direct{3};
  QuasiprobTable pure_form{3};
  double max_discrepancy = 0.0;
  std::size_t worst_index = 0;
  bool agrees = false;
};

PureFormComparison compare_pure_form(const QuantumState& state, const OutcomeBasis& b1,
                                     const OutcomeBasis& b2, const OutcomeBasis& b3);

/// sum m_j m_k q(m1, m2, m3); 1 <= j < k <= 3.
double triple_correlation(const QuasiprobTable& table, int j, int k);

struct PairMarginalResiduals {
  double vs_margenau_hill = 0.0;  // against the two-time quasiprobability
  double vs_sequential = 0.0;     // against sharp sequential (Lueders) probabilities
};

struct TripleMarginalReport {
  std::array<double, 3> born_residual{};  // max_m |marginal at position p - Tr[pi_m rho]|
  PairMarginalResiduals pair12;           // summed over m3
  PairMarginalResiduals pair23;           // summed over m1
  PairMarginalResiduals pair13;           // summed over m2
};

TripleMarginalReport triple_marginals(const QuasiprobTable& table, const QuantumState& state,
                                      const DichotomicObservable& o1, const DichotomicObservable& o2,
                                      const DichotomicObservable& o3);
TripleMarginalReport triple_marginals(const LGScenario& s);

/// <M1 M2 M3> from three consecutive projective measurements,
/// sum m1 m2 m3 Tr[pi3 pi2 pi1 rho pi1 pi2]. Comparison only; G3 uses the
/// quasiprobability moment.
double luders_triple_moment(const QuantumState& state, const DichotomicObservable& o1,
                            const DichotomicObservable& o2, const DichotomicObservable& o3);

}  // namespace lgsw
