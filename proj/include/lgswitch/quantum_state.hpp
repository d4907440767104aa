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

#include <optional>

#include "lgswitch/linalg.hpp"

namespace lgsw {

/// Density operator on a finite-dimensional space, with the state vector
/// kept alongside when the state is pure.
class QuantumState {
 public:
  /// Throws DomainError unless psi is normalized within Tolerances::identity.
  static QuantumState pure(const CVector& psi);
  /// Validates trace, Hermiticity and positivity. Rank-one inputs are
  /// recognized and get a state vector.
  static QuantumState mixed(const CMatrix& rho);
  /// Qubit state (I + r.sigma) / 2 with |r| <= 1.
  static QuantumState from_bloch(const BlochVector& r);
  static QuantumState maximally_mixed(std::size_t dim);

  const CMatrix& rho() const { return rho_; }
  std::size_t dim() const { return rho_.dim(); }
  bool is_pure() const { return pure_.has_value(); }
  /// Throws DomainError for mixed states.
  const CVector& vector() const;

  /// Re Tr[rho A].
  double expectation(const CMatrix& a) const;
  /// Tr[rho^2].
  double purity() const;

 private:
  QuantumState(CMatrix rho, std::optional<CVector> psi)
      : rho_(std::move(rho)), pure_(std::move(psi)) {}

  CMatrix rho_;
  std::optional<CVector> pure_;
};

}  // namespace lgsw
