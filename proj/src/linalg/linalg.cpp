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

#include "lgswitch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"

namespace lgsw {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

// ---------------------------------------------------------------- CVector

CVector::CVector(std::size_t dim) : entries_(dim, Complex{}) {}

CVector::CVector(std::initializer_list<Complex> entries) : entries_(entries) {}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

double CVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return s;
}

double CVector::norm() const { return std::sqrt(norm_squared()); }

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  CVector out = *this;
  out *= Complex{1.0 / n, 0.0};
  return out;
}

bool CVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

bool CVector::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), finite);
}

CVector& CVector::operator+=(const CVector& other) {
  require_same_dim(dim(), other.dim(), "vector add");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same_dim(dim(), other.dim(), "vector subtract");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CVector& CVector::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(Complex s, CVector v) { return v *= s; }

Complex inner(const CVector& u, const CVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner product");
  Complex s{};
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector compare");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---------------------------------------------------------------- CMatrix

CMatrix::CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Complex{}) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), a_() {
  a_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("matrix literal is not square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool CMatrix::all_finite() const { return std::all_of(a_.begin(), a_.end(), finite); }

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix subtract");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matmul");
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

CVector apply(const CMatrix& a, const CVector& v) {
  require_same_dim(a.dim(), v.dim(), "matrix-vector product");
  CVector out(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) { return apply(a, v); }

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
  return out;
}

CMatrix outer(const CVector& u, const CVector& v) {
  require_same_dim(u.dim(), v.dim(), "outer product");
  CMatrix out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

Complex trace(const CMatrix& a) {
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }
CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix compare");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

bool is_hermitian(const CMatrix& a, double tol) { return max_abs_diff(a, adjoint(a)) <= tol; }

bool is_positive_semidefinite(const CMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  const std::size_t n = a.dim();
  CMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real() + tol;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (d <= 0.0) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

const CMatrix& pauli_x() {
  static const CMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const CMatrix& pauli_y() {
  static const CMatrix m{{0.0, -kI}, {kI, 0.0}};
  return m;
}

const CMatrix& pauli_z() {
  static const CMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

CMatrix bloch_operator(const BlochVector& n) {
  return Complex{n[0], 0.0} * pauli_x() + Complex{n[1], 0.0} * pauli_y() +
         Complex{n[2], 0.0} * pauli_z();
}

BlochVector pauli_components(const CMatrix& a) {
  if (a.dim() != 2) throw DimensionError("pauli_components: expected a 2x2 matrix");
  return {0.5 * trace(a * pauli_x()).real(), 0.5 * trace(a * pauli_y()).real(),
          0.5 * trace(a * pauli_z()).real()};
}

CMatrix exponential_series(const CMatrix& hamiltonian, double t) {
  const std::size_t n = hamiltonian.dim();
  CMatrix a = Complex{0.0, -t} * hamiltonian;

  double norm1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  a *= Complex{std::ldexp(1.0, -squarings), 0.0};

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    term *= Complex{1.0 / k, 0.0};
    sum += term;
    if (max_abs(term) <= Tolerances::series * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

CMatrix unitary_evolution(const CMatrix& hamiltonian, double t) {
  if (!hamiltonian.all_finite() || !std::isfinite(t)) {
    throw DomainError("unitary_evolution: non-finite input");
  }
  if (!is_hermitian(hamiltonian, Tolerances::identity)) {
    throw DomainError("unitary_evolution: Hamiltonian is not Hermitian");
  }
  if (hamiltonian.dim() != 2) return exponential_series(hamiltonian, t);

  // H = h0 I + h.sigma  =>  U = e^{-i h0 t} (cos|h|t I - i sin|h|t  h^.sigma)
  const double h0 = 0.5 * trace(hamiltonian).real();
  const BlochVector h = pauli_components(hamiltonian);
  const double hn = length(h);
  const Complex global = std::exp(Complex{0.0, -h0 * t});
  CMatrix u = Complex{std::cos(hn * t), 0.0} * CMatrix::identity(2);
  if (hn > 0.0) {
    const double s = std::sin(hn * t) / hn;
    u -= Complex{0.0, s} * bloch_operator(h);
  }
  return global * u;
}

double dot(const BlochVector& a, const BlochVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double length(const BlochVector& a) { return std::sqrt(dot(a, a)); }

}  // namespace lgsw
