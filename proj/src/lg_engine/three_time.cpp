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

#include "lgswitch/three_time.hpp"

#include <algorithm>
#include <cmath>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"
#include "lgswitch/two_time.hpp"

namespace lgsw {

namespace {

void require_same_dims(const QuantumState& state, const OutcomeBasis& b1, const OutcomeBasis& b2,
                       const OutcomeBasis& b3) {
  if (b1.dim() != state.dim() || b2.dim() != state.dim() || b3.dim() != state.dim()) {
    throw DimensionError("state and bases must live on the same space");
  }
}

Complex direct_kirkwood(const QuantumState& state, const CVector& v1, const CVector& v2,
                        const CVector& v3) {
  return inner(v1, v2) * inner(v2, state.rho() * v3) * inner(v3, v1);
}

Complex pure_form_value(const QuantumState& state, const OutcomeBasis& b1, const OutcomeBasis& b2,
                        const OutcomeBasis& b3, Outcome m1, Outcome m2, Outcome m3) {
  if (!state.is_pure()) throw DomainError("pure-state form needs a pure state");
  const double overlap2 = std::norm(inner(state.vector(), b3.vector(m3)));
  if (std::sqrt(overlap2) <= Tolerances::overlap) {
    throw DomainError("pure-state form undefined: <psi|m3> vanishes");
  }
  const Complex k13 = mh_quasiprob(state, b1, b3, m1, m3).kirkwood;
  const Complex k23 = mh_quasiprob(state, b2, b3, m2, m3).kirkwood;
  return k13 * std::conj(k23) / overlap2;
}

}  // namespace

QuasiprobTable triple_quasiprob(const QuantumState& state, const OutcomeBasis& b1,
                                const OutcomeBasis& b2, const OutcomeBasis& b3) {
  require_same_dims(state, b1, b2, b3);
  QuasiprobTable t(3);
  for (Outcome m1 : kOutcomes)
    for (Outcome m2 : kOutcomes)
      for (Outcome m3 : kOutcomes)
        t.set(t.index({m1, m2, m3}),
              direct_kirkwood(state, b1.vector(m1), b2.vector(m2), b3.vector(m3)));
  return t;
}

QuasiprobTable triple_quasiprob(const LGScenario& s) {
  return triple_quasiprob(s.state(), s.observable(1).basis(), s.observable(2).basis(),
                          s.observable(3).basis());
}

double triple_quasiprob_pure_form_entry(const QuantumState& state, const OutcomeBasis& b1,
                                        const OutcomeBasis& b2, const OutcomeBasis& b3, Outcome m1,
                                        Outcome m2, Outcome m3) {
  require_same_dims(state, b1, b2, b3);
  return pure_form_value(state, b1, b2, b3, m1, m2, m3).real();
}

QuasiprobTable triple_quasiprob_pure_form(const QuantumState& state, const OutcomeBasis& b1,
                                          const OutcomeBasis& b2, const OutcomeBasis& b3) {
  require_same_dims(state, b1, b2, b3);
  QuasiprobTable t(3);
  for (Outcome m1 : kOutcomes)
    for (Outcome m2 : kOutcomes)
      for (Outcome m3 : kOutcomes)
        t.set(t.index({m1, m2, m3}), pure_form_value(state, b1, b2, b3, m1, m2, m3));
  return t;
}

PureFormComparison compare_pure_form(const QuantumState& state, const OutcomeBasis& b1,
                                     const OutcomeBasis& b2, const OutcomeBasis& b3) {
  PureFormComparison c;
  c.direct = triple_quasiprob(state, b1, b2, b3);
  c.pure_form = triple_quasiprob_pure_form(state, b1, b2, b3);
  for (std::size_t i = 0; i < c.direct.size(); ++i) {
    const double d = std::abs(c.direct.value_at(i) - c.pure_form.value_at(i));
    if (d > c.max_discrepancy) {
      c.max_discrepancy = d;
      c.worst_index = i;
    }
  }
  c.agrees = c.max_discrepancy <= Tolerances::pipeline;
  return c;
}

double triple_correlation(const QuasiprobTable& table, int j, int k) {
  if (table.order() != 3) throw DomainError("triple correlation needs an order-3 table");
  require_time_pair(j, k);
  return table.correlation(j, k);
}

TripleMarginalReport triple_marginals(const QuasiprobTable& table, const QuantumState& state,
                                      const DichotomicObservable& o1, const DichotomicObservable& o2,
                                      const DichotomicObservable& o3) {
  if (table.order() != 3) throw DomainError("triple marginals need an order-3 table");
  const std::array<const DichotomicObservable*, 3> obs{&o1, &o2, &o3};
  TripleMarginalReport r;
  for (int p = 1; p <= 3; ++p) {
    for (Outcome m : kOutcomes) {
      const double born = state.expectation(obs[static_cast<std::size_t>(p - 1)]->projector(m));
      auto& slot = r.born_residual[static_cast<std::size_t>(p - 1)];
      slot = std::max(slot, std::abs(table.marginal(p, m) - born));
    }
  }
  auto pair = [&](int a, int b, PairMarginalResiduals& out) {
    const auto& oa = *obs[static_cast<std::size_t>(a - 1)];
    const auto& ob = *obs[static_cast<std::size_t>(b - 1)];
    for (Outcome ma : kOutcomes) {
      for (Outcome mb : kOutcomes) {
        const double marg = table.pair_marginal(a, b, ma, mb);
        const double mh = mh_quasiprob(state, oa.basis(), ob.basis(), ma, mb).mh;
        const double seq = sequential_joint_prob(state, oa, ob, 1.0, ma, mb);
        out.vs_margenau_hill = std::max(out.vs_margenau_hill, std::abs(marg - mh));
        out.vs_sequential = std::max(out.vs_sequential, std::abs(marg - seq));
      }
    }
  };
  pair(1, 2, r.pair12);
  pair(2, 3, r.pair23);
  pair(1, 3, r.pair13);
  return r;
}

TripleMarginalReport triple_marginals(const LGScenario& s) {
  return triple_marginals(triple_quasiprob(s), s.state(), s.observable(1), s.observable(2),
                          s.observable(3));
}

double luders_triple_moment(const QuantumState& state, const DichotomicObservable& o1,
                            const DichotomicObservable& o2, const DichotomicObservable& o3) {
  double s = 0.0;
  for (Outcome m1 : kOutcomes) {
    for (Outcome m2 : kOutcomes) {
      const CMatrix k = o2.projector(m2) * o1.projector(m1);
      const CMatrix after = k * state.rho() * adjoint(k);
      for (Outcome m3 : kOutcomes) {
        s += sign(m1) * sign(m2) * sign(m3) * trace(after * o3.projector(m3)).real();
      }
    }
  }
  return s;
}

}  // namespace lgsw
