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

#include "lgswitch/linalg.hpp"
#include "lgswitch/observable.hpp"
#include "lgswitch/quantum_state.hpp"

namespace lgsw {

struct MeasurementTimes {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

/// Three-time LG setup: the state at t1, the evolution generator, and the
/// observable measured at t1. Later observables are obtained in the
/// Heisenberg picture, M_k = U(t_k - t1)^dagger M_1 U(t_k - t1).
class LGScenario {
 public:
  /// Throws DomainError for unordered times, lambda outside (0, 1], a
  /// non-Hermitian or non-qubit Hamiltonian, or a non-qubit state.
  LGScenario(QuantumState initial, CMatrix hamiltonian, MeasurementTimes times,
             DichotomicObservable base, double lambda = 1.0);

  /// H = (omega / 2) axis.sigma; axis is normalized here.
  static LGScenario precession(QuantumState initial, const BlochVector& axis, double omega,
                               MeasurementTimes times,
                               DichotomicObservable base = DichotomicObservable({0, 0, 1}),
                               double lambda = 1.0);

  const QuantumState& state() const { return initial_; }
  const CMatrix& hamiltonian() const { return hamiltonian_; }
  const MeasurementTimes& times() const { return times_; }
  double lambda() const { return lambda_; }

  /// index in {1, 2, 3}; throws DomainError otherwise.
  const DichotomicObservable& observable(int index) const;

  /// Same scenario with a different unsharpness.
  LGScenario with_lambda(double lambda) const;

  /// |M_3 built as t1 -> t2 -> t3| minus |M_3 built as t1 -> t3|, max entry.
  double heisenberg_chain_residual() const;

 private:
  QuantumState initial_;
  CMatrix hamiltonian_;
  MeasurementTimes times_;
  double lambda_;
  std::array<DichotomicObservable, 3> observables_;
};

/// Throws DomainError unless 1 <= i < j <= 3.
void require_time_pair(int i, int j);

}  // namespace lgsw
