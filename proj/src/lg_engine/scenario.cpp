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

#include "lgswitch/scenario.hpp"

#include <cmath>
#include <string>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"

namespace lgsw {

namespace {

std::array<DichotomicObservable, 3> heisenberg_chain(const CMatrix& h, const MeasurementTimes& t,
                                                     const DichotomicObservable& base) {
  return {base, base.evolved(unitary_evolution(h, t.t2 - t.t1)),
          base.evolved(unitary_evolution(h, t.t3 - t.t1))};
}

const CMatrix& checked_hamiltonian(const CMatrix& h) {
  if (h.dim() != 2) throw DomainError("LG scenarios are qubit scenarios; Hamiltonian must be 2x2");
  if (!h.all_finite() || !is_hermitian(h, Tolerances::identity)) {
    throw DomainError("Hamiltonian must be finite and Hermitian");
  }
  return h;
}

}  // namespace

void require_time_pair(int i, int j) {
  if (i < 1 || j > 3 || i >= j) {
    throw DomainError("time indices must satisfy 1 <= i < j <= 3 (got " + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
  }
}

LGScenario::LGScenario(QuantumState initial, CMatrix hamiltonian, MeasurementTimes times,
                       DichotomicObservable base, double lambda)
    : initial_(std::move(initial)),
      hamiltonian_(checked_hamiltonian(hamiltonian)),
      times_(times),
      lambda_(lambda),
      observables_(heisenberg_chain(hamiltonian_, times_, base)) {
  if (initial_.dim() != 2) throw DomainError("LG scenario state must be a qubit state");
  if (!(times.t1 <= times.t2 && times.t2 <= times.t3)) {
    throw DomainError("measurement times must satisfy t1 <= t2 <= t3");
  }
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("unsharpness lambda must lie in (0, 1]");
}

LGScenario LGScenario::precession(QuantumState initial, const BlochVector& axis, double omega,
                                  MeasurementTimes times, DichotomicObservable base,
                                  double lambda) {
  const double n = length(axis);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("precession axis must be nonzero");
  const BlochVector unit{axis[0] / n, axis[1] / n, axis[2] / n};
  return LGScenario(std::move(initial), Complex{0.5 * omega, 0.0} * bloch_operator(unit), times,
                    std::move(base), lambda);
}

const DichotomicObservable& LGScenario::observable(int index) const {
  if (index < 1 || index > 3) {
    throw DomainError("observable index must be 1, 2 or 3 (got " + std::to_string(index) + ")");
  }
  return observables_[static_cast<std::size_t>(index - 1)];
}

LGScenario LGScenario::with_lambda(double lambda) const {
  return LGScenario(initial_, hamiltonian_, times_, observables_[0], lambda);
}

double LGScenario::heisenberg_chain_residual() const {
  const CMatrix u23 = unitary_evolution(hamiltonian_, times_.t3 - times_.t2);
  const CMatrix chained = adjoint(u23) * observables_[1].matrix() * u23;
  return max_abs_diff(chained, observables_[2].matrix());
}

}  // namespace lgsw
