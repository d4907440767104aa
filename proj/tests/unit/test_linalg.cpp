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

#include <gtest/gtest.h>

#include <numbers>

#include "../support/generators.hpp"
#include "lgswitch/errors.hpp"
#include "lgswitch/linalg.hpp"

namespace lgsw {
namespace {

using testing::naive_matmul;
using testing::random_hermitian;
using testing::random_matrix;

constexpr double kPi = std::numbers::pi;

TEST(Matmul, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(CMatrix::identity(3) * CMatrix::identity(3), CMatrix::identity(3)), 0.0);
}

TEST(Matmul, PauliZTimesXIsIY) {
  EXPECT_LE(max_abs_diff(pauli_z() * pauli_x(), kI * pauli_y()), 1e-15);
}

TEST(Matmul, MatchesTripleLoopOn4x4) {
  Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    EXPECT_LE(max_abs_diff(a * b, naive_matmul(a, b)), 1e-14);
  }
}

TEST(Matmul, DimensionMismatchThrows) {
  EXPECT_THROW(matmul(CMatrix::identity(2), CMatrix::identity(3)), DimensionError);
  EXPECT_THROW(apply(CMatrix::identity(2), CVector(3)), DimensionError);
}

TEST(Matmul, AssociativeOnRandomTriples) {
  Rng rng(12);
  for (int n = 0; n < 100; ++n) {
    const auto dim = static_cast<std::size_t>(2 + n % 3);
    const CMatrix a = random_matrix(rng, dim), b = random_matrix(rng, dim), c = random_matrix(rng, dim);
    EXPECT_LE(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
  }
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(max_abs_diff(adjoint(pauli_y()), pauli_y()), 0.0);
  const CMatrix i_id = kI * CMatrix::identity(2);
  EXPECT_EQ(max_abs_diff(adjoint(i_id), Complex(0, -1) * CMatrix::identity(2)), 0.0);
  Rng rng(13);
  const CMatrix a = random_matrix(rng, 3);
  EXPECT_EQ(max_abs_diff(adjoint(adjoint(a)), a), 0.0);
}

TEST(Kron, IdentityBlocks) {
  EXPECT_EQ(max_abs_diff(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)), 0.0);
  EXPECT_EQ(max_abs_diff(kron(pauli_z(), CMatrix::identity(2)), CMatrix::diagonal({1, 1, -1, -1})), 0.0);
}

TEST(Kron, MixedProductIdentity) {
  Rng rng(14);
  for (int n = 0; n < 50; ++n) {
    const CMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2),
                  d = random_matrix(rng, 2);
    EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-13);
  }
}

TEST(Kron, VectorMatchesMatrixAction) {
  Rng rng(15);
  const CVector u = testing::random_pure_vector(rng, 2), v = testing::random_pure_vector(rng, 3);
  const CMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 3);
  EXPECT_LE(max_abs_diff(kron(a, b) * kron(u, v), kron(a * u, b * v)), 1e-14);
}

TEST(Trace, CyclicOnRandomPairs) {
  Rng rng(16);
  for (int n = 0; n < 100; ++n) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    EXPECT_LE(std::abs(trace(a * b) - trace(b * a)), 1e-13);
  }
}

TEST(Commutators, PauliAlgebra) {
  EXPECT_LE(max_abs_diff(commutator(pauli_x(), pauli_y()), Complex(0, 2) * pauli_z()), 1e-15);
  EXPECT_LE(max_abs(anticommutator(pauli_x(), pauli_y())), 1e-15);
  EXPECT_LE(max_abs_diff(anticommutator(pauli_z(), pauli_z()), Complex(2) * CMatrix::identity(2)), 1e-15);
}

TEST(Positivity, DetectsNegativeEigenvalue) {
  EXPECT_TRUE(is_positive_semidefinite(CMatrix::diagonal({1, 0}), 1e-12));
  EXPECT_FALSE(is_positive_semidefinite(CMatrix::diagonal({1, -1e-6}), 1e-12));
  EXPECT_FALSE(is_positive_semidefinite(pauli_x(), 1e-12));
}

TEST(BlochHelpers, ComponentsRoundTrip) {
  const BlochVector n{0.3, -0.4, 0.5};
  const BlochVector back = pauli_components(bloch_operator(n));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[k], n[k], 1e-15);
  const BlochVector c = cross({1, 0, 0}, {0, 1, 0});
  EXPECT_EQ(c[2], 1.0);
}

TEST(UnitaryEvolution, ZeroTimeIsIdentity) {
  Rng rng(17);
  EXPECT_LE(max_abs_diff(unitary_evolution(random_hermitian(rng, 2), 0.0), CMatrix::identity(2)), 1e-15);
  EXPECT_LE(max_abs_diff(unitary_evolution(random_hermitian(rng, 3), 0.0), CMatrix::identity(3)), 1e-15);
}

TEST(UnitaryEvolution, HalfTurnFlipsSigmaZ) {
  const CMatrix h = Complex(0.5) * pauli_y();
  const CMatrix u = unitary_evolution(h, kPi);
  EXPECT_LE(max_abs_diff(adjoint(u) * pauli_z() * u, Complex(-1) * pauli_z()), 1e-15);
}

TEST(UnitaryEvolution, ThirdTurnMatchesSeriesOracle) {
  const CMatrix h = Complex(0.5) * pauli_y();
  const CMatrix u = unitary_evolution(h, kPi / 3);
  EXPECT_LE(max_abs_diff(u, testing::taylor_exp(h, kPi / 3)), 1e-12);
  const BlochVector b = pauli_components(adjoint(u) * pauli_z() * u);
  EXPECT_NEAR(std::acos(b[2]), kPi / 3, 1e-12);
  EXPECT_NEAR(b[0], -std::sin(kPi / 3), 1e-12);
}

TEST(UnitaryEvolution, ClosedFormMatchesSeriesWithTrace) {
  Rng rng(18);
  for (int n = 0; n < 100; ++n) {
    const CMatrix h = random_hermitian(rng, 2);
    const double t = rng.uniform(-3, 3);
    EXPECT_LE(max_abs_diff(unitary_evolution(h, t), testing::taylor_exp(h, t)), 1e-12);
    EXPECT_LE(max_abs_diff(unitary_evolution(h, t), exponential_series(h, t)), 1e-12);
  }
}

TEST(UnitaryEvolution, UnitaryOnRandomHermitians) {
  Rng rng(19);
  for (int n = 0; n < 200; ++n) {
    const auto dim = static_cast<std::size_t>(2 + n % 4);
    const CMatrix h = Complex(rng.uniform(0.1, 20)) * random_hermitian(rng, dim);
    const CMatrix u = unitary_evolution(h, rng.uniform(-5, 5));
    EXPECT_LE(max_abs_diff(adjoint(u) * u, CMatrix::identity(dim)), 1e-12);
  }
}

TEST(UnitaryEvolution, SeriesFactorsOverTensorProducts) {
  Rng rng(20);
  for (int n = 0; n < 20; ++n) {
    const CMatrix h1 = random_hermitian(rng, 2), h2 = random_hermitian(rng, 2);
    const CMatrix h = kron(h1, CMatrix::identity(2)) + kron(CMatrix::identity(2), h2);
    const double t = rng.uniform(-4, 4);
    EXPECT_LE(max_abs_diff(unitary_evolution(h, t), kron(unitary_evolution(h1, t), unitary_evolution(h2, t))),
              1e-12);
  }
}

TEST(UnitaryEvolution, RejectsNonHermitianAndNonFinite) {
  EXPECT_THROW(unitary_evolution(CMatrix{{0, 1}, {0, 0}}, 1.0), DomainError);
  EXPECT_THROW(unitary_evolution(pauli_x(), std::nan("")), DomainError);
  EXPECT_THROW(unitary_evolution(CMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, 1.0), DomainError);
}

}  // namespace
}  // namespace lgsw
