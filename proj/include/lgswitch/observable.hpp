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
#include <string>

#include "lgswitch/linalg.hpp"

namespace lgsw {

/// Result of a two-outcome measurement.
enum class Outcome : int { plus = 1, minus = -1 };

inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::plus, Outcome::minus};

constexpr double sign(Outcome m) { return static_cast<int>(m); }
constexpr Outcome flip(Outcome m) { return m == Outcome::plus ? Outcome::minus : Outcome::plus; }
constexpr int bit(Outcome m) { return m == Outcome::plus ? 0 : 1; }
/// Accepts +1 or -1; anything else throws DomainError.
Outcome outcome_from_int(int value);
std::string to_string(Outcome m);

/// Orthonormal pair {|+>, |->} labelled by outcome.
class OutcomeBasis {
 public:
  /// Throws DomainError unless both vectors are normalized and orthogonal
  /// within Tolerances::identity.
  OutcomeBasis(CVector plus, CVector minus);

  const CVector& vector(Outcome m) const { return m == Outcome::plus ? plus_ : minus_; }
  CMatrix projector(Outcome m) const { return outer(vector(m), vector(m)); }
  std::size_t dim() const { return plus_.dim(); }

 private:
  CVector plus_;
  CVector minus_;
};

/// Two-outcome qubit observable M = b.sigma for a unit Bloch vector b.
///
/// Projectors are pi_m = (I + m M) / 2. Eigenvectors are fixed by the
/// convention that their first nonzero component is real and positive.
class DichotomicObservable {
 public:
  /// Throws DomainError unless |bloch| = 1 within Tolerances::identity.
  explicit DichotomicObservable(const BlochVector& bloch);

  /// Polar angle theta from +z, azimuth phi from +x.
  static DichotomicObservable from_angles(double theta, double phi);
  /// Hermitian, traceless 2x2 matrix squaring to the identity.
  static DichotomicObservable from_matrix(const CMatrix& m);

  const BlochVector& bloch() const { return bloch_; }
  const CMatrix& matrix() const { return matrix_; }
  const CMatrix& projector(Outcome m) const {
    return m == Outcome::plus ? proj_plus_ : proj_minus_;
  }
  const CVector& eigenvector(Outcome m) const { return basis_.vector(m); }
  const OutcomeBasis& basis() const { return basis_; }

  /// Heisenberg picture: U^dagger M U.
  DichotomicObservable evolved(const CMatrix& u) const;

 private:
  BlochVector bloch_;
  CMatrix matrix_;
  CMatrix proj_plus_;
  CMatrix proj_minus_;
  OutcomeBasis basis_;
};

/// Unit-norm eigenvector of a rank-one projector under the phase convention
/// above.
CVector eigenvector_of_projector(const CMatrix& projector);

}  // namespace lgsw
