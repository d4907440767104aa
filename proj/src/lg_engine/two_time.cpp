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

#include "lgswitch/two_time.hpp"

#include <algorithm>
#include <cmath>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"

namespace lgsw {

namespace {

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("unsharpness lambda must lie in (0, 1]");
}

void require_dim(const QuantumState& state, std::size_t dim) {
  if (state.dim() != dim) throw DimensionError("state and basis dimensions differ");
}

}  // namespace

PovmEffects povm_effects(const DichotomicObservable& obs, double lambda) {
  require_lambda(lambda);
  const Complex hi{0.5 * (1.0 + lambda), 0.0};
  const Complex lo{0.5 * (1.0 - lambda), 0.0};
  const CMatrix& pp = obs.projector(Outcome::plus);
  const CMatrix& pm = obs.projector(Outcome::minus);
  return {hi * pp + lo * pm, hi * pm + lo * pp};
}

CMatrix povm_root(const DichotomicObservable& obs, double lambda, Outcome m) {
  require_lambda(lambda);
  const Complex hi{std::sqrt(0.5 * (1.0 + lambda)), 0.0};
  const Complex lo{std::sqrt(0.5 * (1.0 - lambda)), 0.0};
  return hi * obs.projector(m) + lo * obs.projector(flip(m));
}

double sequential_joint_prob(const QuantumState& state, const DichotomicObservable& first,
                             const DichotomicObservable& second, double lambda, Outcome m_first,
                             Outcome m_second) {
  require_dim(state, 2);
  const CMatrix root = povm_root(first, lambda, m_first);
  const CMatrix updated = adjoint(root) * state.rho() * root;
  return trace(updated * second.projector(m_second)).real();
}

double sequential_joint_prob(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j) {
  require_time_pair(i, j);
  return sequential_joint_prob(s.state(), s.observable(i), s.observable(j), s.lambda(), m_i, m_j);
}

double CorrelationRoutes::residual() const {
  return std::abs(from_joint_probabilities - from_anticommutator);
}

double symmetrized_correlation(const QuantumState& state, const CMatrix& a, const CMatrix& b) {
  return 0.5 * state.expectation(anticommutator(a, b));
}

double symmetrized_correlation(const LGScenario& s, int i, int j) {
  require_time_pair(i, j);
  return symmetrized_correlation(s.state(), s.observable(i).matrix(), s.observable(j).matrix());
}

CorrelationRoutes sequential_correlation_routes(const QuantumState& state,
                                                const DichotomicObservable& first,
                                                const DichotomicObservable& second, double lambda) {
  CorrelationRoutes r;
  for (Outcome a : kOutcomes) {
    for (Outcome b : kOutcomes) {
      r.from_joint_probabilities +=
          sign(a) * sign(b) * sequential_joint_prob(state, first, second, lambda, a, b);
    }
  }
  r.from_anticommutator = lambda * symmetrized_correlation(state, first.matrix(), second.matrix());
  return r;
}

double sequential_correlation(const QuantumState& state, const DichotomicObservable& first,
                              const DichotomicObservable& second, double lambda) {
  const CorrelationRoutes r = sequential_correlation_routes(state, first, second, lambda);
  if (r.residual() > Tolerances::pipeline) {
    throw InvariantViolation("sequential correlation routes disagree");
  }
  return r.from_joint_probabilities;
}

double sequential_correlation(const LGScenario& s, int i, int j) {
  require_time_pair(i, j);
  return sequential_correlation(s.state(), s.observable(i), s.observable(j), s.lambda());
}

KirkwoodValue mh_quasiprob(const QuantumState& state, const OutcomeBasis& basis_i,
                           const OutcomeBasis& basis_j, Outcome m_i, Outcome m_j) {
  if (basis_i.dim() != basis_j.dim()) throw DimensionError("bases differ in dimension");
  require_dim(state, basis_i.dim());
  const CVector& vi = basis_i.vector(m_i);
  const CVector& vj = basis_j.vector(m_j);
  const Complex k = inner(vi, vj) * inner(vj, state.rho() * vi);
  return {k, k.real()};
}

KirkwoodValue mh_quasiprob(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j) {
  require_time_pair(i, j);
  return mh_quasiprob(s.state(), s.observable(i).basis(), s.observable(j).basis(), m_i, m_j);
}

QuasiprobTable two_time_table(const QuantumState& state, const OutcomeBasis& basis_i,
                              const OutcomeBasis& basis_j) {
  QuasiprobTable t(2);
  for (Outcome a : kOutcomes) {
    for (Outcome b : kOutcomes) t.set(t.index({a, b}), mh_quasiprob(state, basis_i, basis_j, a, b).kirkwood);
  }
  return t;
}

QuasiprobTable two_time_table(const LGScenario& s, int i, int j) {
  require_time_pair(i, j);
  return two_time_table(s.state(), s.observable(i).basis(), s.observable(j).basis());
}

double quasiprob_moment_form(const QuantumState& state, const DichotomicObservable& a,
                             const DichotomicObservable& b, Outcome m_i, Outcome m_j) {
  const double ea = state.expectation(a.matrix());
  const double eb = state.expectation(b.matrix());
  const double c = symmetrized_correlation(state, a.matrix(), b.matrix());
  return 0.25 * (1.0 + sign(m_i) * ea + sign(m_j) * eb + sign(m_i) * sign(m_j) * c);
}

double quasiprob_moment_form(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j) {
  require_time_pair(i, j);
  return quasiprob_moment_form(s.state(), s.observable(i), s.observable(j), m_i, m_j);
}

double g2(const LGScenario& s, int i, int j, Outcome m_i, Outcome m_j) {
  require_time_pair(i, j);
  const double ei = s.state().expectation(s.observable(i).matrix());
  const double ej = s.state().expectation(s.observable(j).matrix());
  return 1.0 + sign(m_i) * ei + sign(m_j) * ej +
         sign(m_i) * sign(m_j) * symmetrized_correlation(s, i, j);
}

NsitReport nsit_check_two_time(const QuantumState& state, const DichotomicObservable& first,
                               const DichotomicObservable& second, double lambda) {
  NsitReport r;
  const QuasiprobTable q = two_time_table(state, first.basis(), second.basis());
  for (Outcome m : kOutcomes) {
    const double born_later = state.expectation(second.projector(m));
    const double born_earlier = state.expectation(first.projector(m));
    r.quasi_residual_later = std::max(r.quasi_residual_later, std::abs(q.marginal(2, m) - born_later));
    r.quasi_residual_earlier =
        std::max(r.quasi_residual_earlier, std::abs(q.marginal(1, m) - born_earlier));
    double seq = 0.0;
    for (Outcome a : kOutcomes) seq += sequential_joint_prob(state, first, second, lambda, a, m);
    r.sequential_gap = std::max(r.sequential_gap, std::abs(seq - born_later));
  }
  return r;
}

NsitReport nsit_check_two_time(const LGScenario& s, int i, int j) {
  require_time_pair(i, j);
  return nsit_check_two_time(s.state(), s.observable(i), s.observable(j), s.lambda());
}

Complex weak_value_projector(const QuantumState& state, const OutcomeBasis& basis_i,
                             const OutcomeBasis& basis_j, Outcome m_i, Outcome m_j) {
  if (!state.is_pure()) throw DomainError("weak value needs a pure pre-selected state");
  require_dim(state, basis_i.dim());
  const CVector& psi = state.vector();
  const CVector& vi = basis_i.vector(m_i);
  const CVector& vj = basis_j.vector(m_j);
  const Complex post = inner(vj, psi);
  if (std::abs(post) <= Tolerances::overlap) {
    throw DomainError("weak value undefined: post-selected state is orthogonal to the state");
  }
  return inner(vj, vi) * inner(vi, psi) / post;
}

bool is_anomalous_projector_weak_value(Complex w, double tol) {
  return w.real() < -tol || w.real() > 1.0 + tol || std::abs(w.imag()) > tol;
}

}  // namespace lgsw
