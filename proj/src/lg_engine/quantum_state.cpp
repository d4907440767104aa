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

#include "lgswitch/quantum_state.hpp"

#include <cmath>

#include "lgswitch/errors.hpp"
#include "lgswitch/observable.hpp"
#include "lgswitch/tolerances.hpp"

namespace lgsw {

QuantumState QuantumState::pure(const CVector& psi) {
  if (psi.dim() == 0 || !psi.all_finite()) throw DomainError("state vector is empty or non-finite");
  if (!psi.is_normalized(Tolerances::identity)) throw DomainError("state vector is not normalized");
  return QuantumState(outer(psi, psi), psi);
}

QuantumState QuantumState::mixed(const CMatrix& rho) {
  if (rho.dim() == 0 || !rho.all_finite()) throw DomainError("density matrix is empty or non-finite");
  if (!is_hermitian(rho, Tolerances::identity)) throw DomainError("density matrix is not Hermitian");
  if (std::abs(trace(rho) - Complex{1.0, 0.0}) > Tolerances::identity) {
    throw DomainError("density matrix must have unit trace");
  }
  if (!is_positive_semidefinite(rho, Tolerances::identity)) {
    throw DomainError("density matrix has a negative eigenvalue");
  }
  const double p = trace(rho * rho).real();
  if (std::abs(p - 1.0) <= Tolerances::identity) {
    CVector psi = eigenvector_of_projector(rho);
    return QuantumState(outer(psi, psi), psi);
  }
  return QuantumState(rho, std::nullopt);
}

QuantumState QuantumState::from_bloch(const BlochVector& r) {
  const double n = length(r);
  if (!std::isfinite(n) || n > 1.0 + Tolerances::identity) {
    throw DomainError("Bloch vector must have length at most 1");
  }
  const CMatrix rho = Complex{0.5, 0.0} * (CMatrix::identity(2) + bloch_operator(r));
  if (std::abs(n - 1.0) <= Tolerances::identity) {
    BlochVector unit = r;
    for (auto& x : unit) x /= n;
    const DichotomicObservable dir(unit);
    return pure(dir.eigenvector(Outcome::plus));
  }
  return QuantumState(rho, std::nullopt);
}

QuantumState QuantumState::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DomainError("dimension must be positive");
  return QuantumState(Complex{1.0 / static_cast<double>(dim), 0.0} * CMatrix::identity(dim),
                      dim == 1 ? std::optional<CVector>(CVector{1.0}) : std::nullopt);
}

const CVector& QuantumState::vector() const {
  if (!pure_) throw DomainError("state is mixed; no state vector");
  return *pure_;
}

double QuantumState::expectation(const CMatrix& a) const { return trace(rho_ * a).real(); }

double QuantumState::purity() const { return trace(rho_ * rho_).real(); }

}  // namespace lgsw
