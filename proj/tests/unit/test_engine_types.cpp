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
#include "lgswitch/quasiprob_table.hpp"
#include "lgswitch/scenario.hpp"

namespace lgsw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Outcome P = Outcome::plus;
constexpr Outcome M = Outcome::minus;

TEST(Outcome, Conversions) {
  EXPECT_EQ(sign(P), 1.0);
  EXPECT_EQ(sign(M), -1.0);
  EXPECT_EQ(flip(P), M);
  EXPECT_EQ(outcome_from_int(-1), M);
  EXPECT_THROW(outcome_from_int(0), DomainError);
}

TEST(DichotomicObservable, ProjectorAlgebraOnRandomAxes) {
  Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    const DichotomicObservable o(testing::random_unit(rng));
    const CMatrix& m = o.matrix();
    EXPECT_TRUE(is_hermitian(m, 1e-12));
    EXPECT_LE(max_abs_diff(m * m, CMatrix::identity(2)), 1e-12);
    EXPECT_LE(max_abs_diff(o.projector(P) + o.projector(M), CMatrix::identity(2)), 1e-12);
    for (Outcome s : kOutcomes) {
      const CMatrix& pi = o.projector(s);
      EXPECT_TRUE(is_hermitian(pi, 1e-12));
      EXPECT_LE(max_abs_diff(pi * pi, pi), 1e-12);
      EXPECT_LE(max_abs_diff(outer(o.eigenvector(s), o.eigenvector(s)), pi), 1e-12);
      EXPECT_LE(max_abs_diff(m * o.eigenvector(s), Complex(sign(s)) * o.eigenvector(s)), 1e-12);
    }
  }
}

TEST(DichotomicObservable, EigenvectorPhaseConvention) {
  Rng rng(22);
  for (int n = 0; n < 100; ++n) {
    const DichotomicObservable o(testing::random_unit(rng));
    for (Outcome s : kOutcomes) {
      const CVector& v = o.eigenvector(s);
      const Complex first = std::abs(v[0]) > 1e-12 ? v[0] : v[1];
      EXPECT_GT(first.real(), 0.0);
      EXPECT_NEAR(first.imag(), 0.0, 1e-15);
    }
  }
  const DichotomicObservable z({0, 0, 1});
  EXPECT_LE(max_abs_diff(z.eigenvector(P), CVector{1, 0}), 1e-15);
  EXPECT_LE(max_abs_diff(z.eigenvector(M), CVector{0, 1}), 1e-15);
}

TEST(DichotomicObservable, Validation) {
  EXPECT_THROW(DichotomicObservable({0, 0, 0.9}), DomainError);
  EXPECT_THROW(DichotomicObservable::from_matrix(CMatrix::identity(2)), DomainError);
  EXPECT_THROW(DichotomicObservable::from_matrix(CMatrix{{0, 1}, {0, 0}}), DomainError);
  const auto x = DichotomicObservable::from_matrix(pauli_x());
  EXPECT_NEAR(x.bloch()[0], 1.0, 1e-15);
  const auto a = DichotomicObservable::from_angles(kPi / 2, kPi / 2);
  EXPECT_NEAR(a.bloch()[1], 1.0, 1e-15);
}

TEST(OutcomeBasis, RejectsNonOrthonormal) {
  EXPECT_THROW(OutcomeBasis(CVector{1, 0}, CVector{1, 1}), DomainError);
  EXPECT_THROW(OutcomeBasis(CVector{1, 0}, CVector{0, 2}), DomainError);
  EXPECT_NO_THROW(OutcomeBasis(CVector{1, 0}, CVector{0, 1}));
}

TEST(QuantumState, Validation) {
  EXPECT_THROW(QuantumState::pure(CVector{1, 1}), DomainError);
  EXPECT_THROW(QuantumState::mixed(CMatrix::diagonal({0.7, 0.7})), DomainError);
  EXPECT_THROW(QuantumState::mixed(CMatrix::diagonal({1.5, -0.5})), DomainError);
  EXPECT_THROW(QuantumState::mixed(CMatrix{{0.5, 1}, {0, 0.5}}), DomainError);
  EXPECT_THROW(QuantumState::from_bloch({0, 0, 1.1}), DomainError);
  EXPECT_THROW(QuantumState::maximally_mixed(2).vector(), DomainError);
}

TEST(QuantumState, PurityFlagMatchesRank) {
  Rng rng(23);
  for (int n = 0; n < 100; ++n) {
    const CVector psi = testing::random_pure_vector(rng, 2);
    const QuantumState s = QuantumState::mixed(outer(psi, psi));
    ASSERT_TRUE(s.is_pure());
    EXPECT_LE(max_abs_diff(outer(s.vector(), s.vector()), s.rho()), 1e-12);
    const QuantumState b = QuantumState::from_bloch(testing::random_ball(rng));
    EXPECT_EQ(b.is_pure(), std::abs(b.purity() - 1.0) <= 1e-12);
    EXPECT_NEAR(trace(b.rho()).real(), 1.0, 1e-12);
    EXPECT_TRUE(is_positive_semidefinite(b.rho(), 1e-12));
  }
  EXPECT_TRUE(QuantumState::from_bloch({0.6, 0, 0.8}).is_pure());
  EXPECT_NEAR(QuantumState::maximally_mixed(2).purity(), 0.5, 1e-15);
}

TEST(LGScenario, HeisenbergChainConsistency) {
  Rng rng(24);
  for (int n = 0; n < 200; ++n) {
    const LGScenario s = testing::random_scenario(rng);
    EXPECT_LE(s.heisenberg_chain_residual(), 1e-12);
    const CMatrix u = unitary_evolution(s.hamiltonian(), s.times().t3 - s.times().t2);
    EXPECT_LE(max_abs_diff(adjoint(u) * s.observable(2).matrix() * u, s.observable(3).matrix()), 1e-12);
  }
}

TEST(LGScenario, QuarterTurnTakesZToMinusX) {
  const LGScenario s = LGScenario::precession(QuantumState::maximally_mixed(2), {0, 1, 0}, 1.0,
                                              {0, kPi / 2, kPi});
  EXPECT_NEAR(s.observable(2).bloch()[0], -1.0, 1e-15);
  EXPECT_NEAR(s.observable(3).bloch()[2], -1.0, 1e-15);
}

TEST(LGScenario, Validation) {
  const QuantumState rho = QuantumState::maximally_mixed(2);
  EXPECT_THROW(LGScenario::precession(rho, {0, 1, 0}, 1.0, {0, 2, 1}), DomainError);
  EXPECT_THROW(LGScenario::precession(rho, {0, 1, 0}, 1.0, {0, 1, 2}, DichotomicObservable({0, 0, 1}), 0.0),
               DomainError);
  EXPECT_THROW(LGScenario::precession(rho, {0, 1, 0}, 1.0, {0, 1, 2}, DichotomicObservable({0, 0, 1}), 1.5),
               DomainError);
  EXPECT_THROW(LGScenario::precession(rho, {0, 0, 0}, 1.0, {0, 1, 2}), DomainError);
  EXPECT_THROW(LGScenario(rho, CMatrix{{0, 1}, {0, 0}}, {0, 1, 2}, DichotomicObservable({0, 0, 1})),
               DomainError);
  EXPECT_THROW(LGScenario(QuantumState::maximally_mixed(3), CMatrix::zero(2), {0, 1, 2},
                          DichotomicObservable({0, 0, 1})),
               DomainError);
  const LGScenario s = LGScenario::precession(rho, {0, 1, 0}, 1.0, {0, 1, 2});
  EXPECT_THROW(s.observable(4), DomainError);
  EXPECT_THROW(require_time_pair(2, 1), DomainError);
  EXPECT_THROW(require_time_pair(1, 4), DomainError);
  EXPECT_NO_THROW(require_time_pair(1, 3));
  EXPECT_EQ(s.with_lambda(0.25).lambda(), 0.25);
}

TEST(QuasiprobTable, IndexingAndMarginals) {
  QuasiprobTable t(3);
  EXPECT_EQ(t.index({P, P, P}), 0u);
  EXPECT_EQ(t.index({M, P, P}), 4u);
  EXPECT_EQ(t.index({P, M, M}), 3u);
  EXPECT_EQ(t.tuple(5), (std::vector<Outcome>{M, P, M}));
  for (std::size_t k = 0; k < 8; ++k) t.set(k, Complex(static_cast<double>(k + 1), 0.5));
  EXPECT_EQ(t.total(), 36.0);
  EXPECT_EQ(t.min_value(), 1.0);
  EXPECT_EQ(t.marginal(1, M), 5 + 6 + 7 + 8);
  EXPECT_EQ(t.pair_marginal(1, 3, P, M), 2 + 4);
  EXPECT_EQ(t.kirkwood({P, P, M}), Complex(2, 0.5));
  EXPECT_THROW(t.index({P, P}), DimensionError);
  EXPECT_THROW(t.marginal(4, P), DomainError);
  EXPECT_THROW(QuasiprobTable(4), DomainError);
  EXPECT_THROW(QuasiprobTable(2).triple_moment(), DomainError);
}

}  // namespace
}  // namespace lgsw
