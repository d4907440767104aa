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

// Quantum-switch Mach-Zehnder interferometer.
//
// Composite states live on path (x) polarization, index = 2 * path + pol.
// Before the output beam splitter the path basis is {psi_H, psi_V} and the
// polarization basis {H, V}; afterwards they are {psi_3, psi_4} and {+, -}.
//
// The output beam splitter is fixed:
//   psi_H -> (psi_3 + i psi_4) / sqrt2,   psi_V -> (i psi_3 + psi_4) / sqrt2,
// and polarization is read out in H = (+ + -)/sqrt2, V = (+ - -)/sqrt2.

#include <array>
#include <cstddef>
#include <numbers>

#include "lgswitch/linalg.hpp"
#include "lgswitch/observable.hpp"

namespace lgsw {

/// How the photon reaches the two switch arms.
enum class Routing {
  // A polarizing beam splitter sends H to arm psi_H and V to arm psi_V, so
  // path and polarization become correlated.
  polarizing_beam_splitter,
  // The path is prepared in (psi_H + psi_V)/sqrt2 independently of the
  // polarization (textbook switch with a separate control qubit).
  coherent_control,
};

/// Measurement operators for the two outcomes of one switch channel.
struct KrausPair {
  CMatrix plus;
  CMatrix minus;
  bool projective = true;
  const CMatrix& operator[](Outcome m) const { return m == Outcome::plus ? plus : minus; }
};

KrausPair projective_kraus(const DichotomicObservable& obs);
/// sqrt of the unsharp effects; marked projective only when lambda == 1.
KrausPair unsharp_kraus(const DichotomicObservable& obs, double lambda);
/// max |sum_m N_m^dagger N_m - I|
double kraus_completeness_residual(const KrausPair& k);

/// Phase factors applied to each arm before the output beam splitter.
struct SwitchPhases {
  double arm_h = std::numbers::pi;
  double arm_v = 0.0;

  /// pi on psi_H, nothing on psi_V.
  static SwitchPhases pi_on_h() { return {std::numbers::pi, 0.0}; }
  /// Relative phase under which the psi_3 output carries
  /// (N_i N_j |H> + N_j N_i |V>) / 2 with no extra global phase.
  static SwitchPhases anticommutator_aligned() { return {0.0, -std::numbers::pi / 2}; }
};

struct SwitchConfig {
  CVector system_input{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
  KrausPair kraus_i;
  KrausPair kraus_j;
  SwitchPhases phases;
  Routing routing = Routing::polarizing_beam_splitter;

  /// Projective channels for the two observables, default phases and input.
  static SwitchConfig projective(const DichotomicObservable& obs_i, const DichotomicObservable& obs_j);

  /// Throws DomainError for an unnormalized input or an incomplete Kraus
  /// family (tolerance: Tolerances::identity).
  void validate() const;
};

inline constexpr std::size_t composite_index(int path, int pol) {
  return static_cast<std::size_t>(2 * path + pol);
}

/// Polarization state |+> = (H + V)/sqrt2 and |-> = (H - V)/sqrt2.
CVector polarization_plus();
CVector polarization_minus();

/// State right after the input optics. Throws DomainError for an
/// unnormalized system input.
CVector prepare_input(const SwitchConfig& config);
/// N_i N_j on arm psi_H, N_j N_i on arm psi_V. The result is the
/// unnormalized branch for outcomes (m_i, m_j).
CVector apply_switch(const CVector& state, const SwitchConfig& config, Outcome m_i, Outcome m_j);
/// Arm phases, output beam splitter, then polarization rebasing to {+,-}.
CVector apply_ps_and_bs(const CVector& state, const SwitchConfig& config);

struct SwitchRun {
  Outcome m_i = Outcome::plus;
  Outcome m_j = Outcome::plus;
  CVector final_state{4};

  /// path is 3 or 4; pol is the {+,-} readout outcome.
  Complex amplitude(int path, Outcome pol) const;
  double probability(int path, Outcome pol) const { return std::norm(amplitude(path, pol)); }
  /// Squared norm of the branch, i.e. the probability of (m_i, m_j).
  double branch_weight() const { return final_state.norm_squared(); }
};

SwitchRun run_switch(const SwitchConfig& config, Outcome m_i, Outcome m_j);

/// Quasiprobability read from the (psi_3, +) amplitude. `scale` is sqrt2
/// for beam-splitter routing and 1 for coherent control.
struct QuasiprobReadout {
  Complex amplitude;
  double scale = 0.0;
  double value = 0.0;      // scale * Re amplitude
  double imaginary = 0.0;  // scale * Im amplitude
};

/// Throws DomainError unless both channels are projective and the system
/// input is |+>.
QuasiprobReadout postselect_quasiprob(const SwitchRun& run, const SwitchConfig& config);

/// (1/2) <+|{N_i, N_j}|+>, the quasiprobability the readout targets.
double anticommutator_quasiprob(const SwitchConfig& config, Outcome m_i, Outcome m_j);
/// (1/2) <+|[N_i, N_j]|->. With beam-splitter routing and aligned phases the
/// readout equals anticommutator_quasiprob + this term.
Complex commutator_cross_term(const SwitchConfig& config, Outcome m_i, Outcome m_j);

/// Probability of every (m_i, m_j, path, pol) detector event.
struct DetectorStatistics {
  std::array<double, 16> probability{};
  double total = 0.0;

  static std::size_t index(Outcome m_i, Outcome m_j, int path, Outcome pol);
  double at(Outcome m_i, Outcome m_j, int path, Outcome pol) const {
    return probability[index(m_i, m_j, path, pol)];
  }
};

/// Throws DomainError if the Kraus families are incomplete.
DetectorStatistics detector_statistics(const SwitchConfig& config);

/// The closed-form output state
///   psi_3: ({N_i,N_j}|+> + [N_i,N_j]|->) / (2 sqrt2)
///   psi_4: i([N_j,N_i]|+> - {N_i,N_j}|->) / (2 sqrt2)
/// compared slot by slot with the simulated one.
struct ClosedFormCheck {
  std::array<Complex, 4> simulated{};  // (3,+), (3,-), (4,+), (4,-)
  std::array<Complex, 4> closed_form{};
  std::array<double, 4> slot_residual{};
  double max_residual = 0.0;
  // After removing the best single global phase.
  double max_residual_up_to_global_phase = 0.0;
  // Residual on the psi_3 slots alone, up to a global phase.
  double path3_residual_up_to_global_phase = 0.0;
};

ClosedFormCheck check_closed_form(const SwitchConfig& config, Outcome m_i, Outcome m_j);

}  // namespace lgsw
