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

// Small dense complex linear algebra. Every operator in the library
// (density matrices, observables, projectors, evolution operators, Kraus
// operators, composite path-polarization states) is one of these types.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lgsw {

using Complex = std::complex<double>;
using BlochVector = std::array<double, 3>;

inline constexpr Complex kI{0.0, 1.0};

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim);
  CVector(std::initializer_list<Complex> entries);
  explicit CVector(std::vector<Complex> entries);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  double norm() const;
  double norm_squared() const;
  CVector normalized() const;
  bool is_normalized(double tol) const;
  bool all_finite() const;

  const std::vector<Complex>& entries() const { return entries_; }

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex s);

 private:
  std::vector<Complex> entries_;
};

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(Complex s, CVector v);

/// <u|v>, antilinear in the first argument.
Complex inner(const CVector& u, const CVector& v);
double max_abs_diff(const CVector& a, const CVector& b);

/// Square matrix stored row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  /// Rows of equal length; throws DimensionError if not square.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix zero(std::size_t dim) { return CMatrix(dim); }
  static CMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);

/// Matrix product; throws DimensionError when dimensions differ.
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
/// Matrix-vector product.
CVector apply(const CMatrix& a, const CVector& v);
CVector operator*(const CMatrix& a, const CVector& v);

CMatrix adjoint(const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
/// |u><v|
CMatrix outer(const CVector& u, const CVector& v);
Complex trace(const CMatrix& a);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// Largest |a_rc| over all entries.
double max_abs(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tol);
/// Hermitian positive semidefinite within tol (Cholesky of a + tol*I).
bool is_positive_semidefinite(const CMatrix& a, double tol);

// Pauli matrices in the computational basis {|0>, |1>}.
const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
/// n.sigma for a real 3-vector n.
CMatrix bloch_operator(const BlochVector& n);
/// Components h_k = Tr(a sigma_k) / 2 of a 2x2 matrix (real part).
BlochVector pauli_components(const CMatrix& a);

/// U = exp(-i H t) with hbar = 1. Qubits use the closed Pauli form,
/// larger dimensions a scaling-and-squaring Taylor series.
/// Throws DomainError if H is not Hermitian within Tolerances::identity.
CMatrix unitary_evolution(const CMatrix& hamiltonian, double t);

/// Series route for exp(-i H t), usable for any dimension.
CMatrix exponential_series(const CMatrix& hamiltonian, double t);

double dot(const BlochVector& a, const BlochVector& b);
BlochVector cross(const BlochVector& a, const BlochVector& b);
double length(const BlochVector& a);

}  // namespace lgsw
