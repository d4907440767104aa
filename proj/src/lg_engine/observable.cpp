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

#include "lgswitch/observable.hpp"

#include <cmath>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"

namespace lgsw {

Outcome outcome_from_int(int value) {
  if (value == 1) return Outcome::plus;
  if (value == -1) return Outcome::minus;
  throw DomainError("outcome must be +1 or -1, got " + std::to_string(value));
}

std::string to_string(Outcome m) { return m == Outcome::plus ? "+" : "-"; }

OutcomeBasis::OutcomeBasis(CVector plus, CVector minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.dim() != minus_.dim()) throw DimensionError("basis vectors differ in dimension");
  if (!plus_.is_normalized(Tolerances::identity) || !minus_.is_normalized(Tolerances::identity)) {
    throw DomainError("basis vectors must be normalized");
  }
  if (std::abs(inner(plus_, minus_)) > Tolerances::identity) {
    throw DomainError("basis vectors must be orthogonal");
  }
}

CVector eigenvector_of_projector(const CMatrix& projector) {
  const std::size_t n = projector.dim();
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(projector(r, c));
    if (s > best_norm) {
      best_norm = s;
      best = c;
    }
  }
  CVector v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = projector(r, best);
  v = v.normalized();
  for (std::size_t r = 0; r < n; ++r) {
    if (std::abs(v[r]) > Tolerances::overlap) {
      const Complex phase = std::conj(v[r]) / std::abs(v[r]);
      v *= phase;
      v[r] = Complex{v[r].real(), 0.0};
      break;
    }
  }
  return v;
}

namespace {

CMatrix projector_from(const CMatrix& m, Outcome outcome) {
  return Complex{0.5, 0.0} * (CMatrix::identity(2) + Complex{sign(outcome), 0.0} * m);
}

}  // namespace

DichotomicObservable::DichotomicObservable(const BlochVector& bloch)
    : bloch_(bloch),
      matrix_(bloch_operator(bloch)),
      proj_plus_(projector_from(matrix_, Outcome::plus)),
      proj_minus_(projector_from(matrix_, Outcome::minus)),
      basis_(eigenvector_of_projector(proj_plus_), eigenvector_of_projector(proj_minus_)) {
  if (!std::isfinite(length(bloch)) || std::abs(length(bloch) - 1.0) > Tolerances::identity) {
    throw DomainError("dichotomic observable needs a unit Bloch vector");
  }
}

DichotomicObservable DichotomicObservable::from_angles(double theta, double phi) {
  return DichotomicObservable(BlochVector{std::sin(theta) * std::cos(phi),
                                          std::sin(theta) * std::sin(phi), std::cos(theta)});
}

DichotomicObservable DichotomicObservable::from_matrix(const CMatrix& m) {
  if (m.dim() != 2) throw DimensionError("dichotomic observable must be 2x2");
  if (!is_hermitian(m, Tolerances::identity)) throw DomainError("observable must be Hermitian");
  if (std::abs(trace(m)) > Tolerances::identity) {
    throw DomainError("dichotomic qubit observable must be traceless");
  }
  if (max_abs_diff(m * m, CMatrix::identity(2)) > Tolerances::identity) {
    throw DomainError("dichotomic observable must square to the identity");
  }
  BlochVector b = pauli_components(m);
  const double n = length(b);
  for (auto& x : b) x /= n;
  return DichotomicObservable(b);
}

DichotomicObservable DichotomicObservable::evolved(const CMatrix& u) const {
  return from_matrix(adjoint(u) * matrix_ * u);
}

}  // namespace lgsw
