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

// Two-time quantities: unsharp sequential measurement statistics, the
// Margenau-Hill / Kirkwood quasiprobability, its moment expansion, the
// two-time LG inequalities, no-signalling-in-time marginals and the
// weak-value form.

#include "lgswitch/linalg.hpp"
#include "lgswitch/observable.hpp"
#include "lgswitch/quantum_state.hpp"
#include "lgswitch/quasiprob_table.hpp"
#include "lgswitch/scenario.hpp"

namespace lgsw {

struct PovmEffects {
  CMatrix plus;
  CMatrix minus;
  const CMatrix& operator[](Outcome m) const { return m == Outcome::plus ? plus : minus; }
};

/// E^(+-) = (1 +- lambda)/2 pi_(+-) + (1 -+ lambda)/2 pi_(-+).
/// Throws DomainError for lambda outside (0, 1].
PovmEffects povm_effects(const DichotomicObservable& obs, double lambda);
/// Positive square root of E^m (diagonal in the eigenbasis of M).
CMatrix povm_root(const DichotomicObservable& obs, double lambda, Outcome m);

/// P(m1, m2) = Tr[ sqrt(E^m1) rho sqrt(E^m1) pi_m2 ]: unsharp first
/// measurement, projective second one.
double sequential_joint_prob(const QuantumState& state, const DichotomicObservable& first,
                             const DichotomicObservable& second, double lambda, Outcome m_first,
                             Outcome m_second);
/// Uses the scenario's lambda for measurement i. Requires 1 <= i < j <= 3.
double sequential_joint_prob(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j);

/// <A B>_seq computed as sum m1 m2 P(m1, m2) and as (lambda/2) Tr[rho {A, B}].
struct CorrelationRoutes {
  double from_joint_probabilities = 0.0;
  double from_anticommutator = 0.0;
  double residual() const;
};

CorrelationRoutes sequential_correlation_routes(const QuantumState& state,
                                                const DichotomicObservable& first,
                                                const DichotomicObservable& second, double lambda);
/// Throws InvariantViolation if the two routes differ by more than
/// Tolerances::pipeline.
double sequential_correlation(const QuantumState& state, const DichotomicObservable& first,
                              const DichotomicObservable& second, double lambda);
double sequential_correlation(const LGScenario& s, int i, int j);

/// (1/2) Tr[rho {A, B}]: the sharp sequential correlation entering every
/// inequality.
double symmetrized_correlation(const QuantumState& state, const CMatrix& a, const CMatrix& b);
double symmetrized_correlation(const LGScenario& s, int i, int j);

struct KirkwoodValue {
  Complex kirkwood;  // <m_i|m_j><m_j|rho|m_i>
  double mh = 0.0;   // real part
};

KirkwoodValue mh_quasiprob(const QuantumState& state, const OutcomeBasis& basis_i,
                           const OutcomeBasis& basis_j, Outcome m_i, Outcome m_j);
KirkwoodValue mh_quasiprob(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j);

QuasiprobTable two_time_table(const QuantumState& state, const OutcomeBasis& basis_i,
                              const OutcomeBasis& basis_j);
QuasiprobTable two_time_table(const LGScenario& s, int i, int j);

/// (1/4)(1 + m_i<A> + m_j<B> + m_i m_j (1/2)Tr[rho{A,B}]).
double quasiprob_moment_form(const QuantumState& state, const DichotomicObservable& a,
                             const DichotomicObservable& b, Outcome m_i, Outcome m_j);
double quasiprob_moment_form(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j);

/// 1 + m_i<M_i> + m_j<M_j> + m_i m_j <M_i M_j>; non-negative under
/// macrorealism.
double g2(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j);

/// Marginal residuals. The quasiprobability residuals vanish identically;
/// the sequential gap generally does not.
struct NsitReport {
  double quasi_residual_later = 0.0;    // max_mj |sum_mi q(mi,mj) - Tr[pi_mj rho]|
  double quasi_residual_earlier = 0.0;  // max_mi |sum_mj q(mi,mj) - Tr[pi_mi rho]|
  double sequential_gap = 0.0;          // max_mj |sum_mi P(mi,mj) - Tr[pi_mj rho]|
};

NsitReport nsit_check_two_time(const QuantumState& state, const DichotomicObservable& first,
                               const DichotomicObservable& second, double lambda);
NsitReport nsit_check_two_time(const LGScenario& s, int i, int j);

/// (|m_i><m_i|)_w = <m_j|m_i><m_i|psi> / <m_j|psi> for a pure state.
/// Throws DomainError for mixed states or |<m_j|psi>| <= Tolerances::overlap.
Complex weak_value_projector(const QuantumState& state, const OutcomeBasis& basis_i,
                             const OutcomeBasis& basis_j, Outcome m_i, Outcome m_j);
/// Real part outside [0, 1] or a nonzero imaginary part.
bool is_anomalous_projector_weak_value(Complex w, double tol);

}  // namespace lgsw
