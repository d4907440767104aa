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

#include "lgswitch/switch_sim.hpp"

#include <algorithm>
#include <cmath>

#include "lgswitch/errors.hpp"
#include "lgswitch/tolerances.hpp"
#include "lgswitch/two_time.hpp"

namespace lgsw {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

CVector polarization_of(const CVector& state, int path) {
  return CVector{state[composite_index(path, 0)], state[composite_index(path, 1)]};
}

void set_polarization(CVector& state, int path, const CVector& pol) {
  state[composite_index(path, 0)] = pol[0];
  state[composite_index(path, 1)] = pol[1];
}

void require_composite(const CVector& state) {
  if (state.dim() != 4) throw DimensionError("switch states live on a 4-dimensional space");
}

}  // namespace

KrausPair projective_kraus(const DichotomicObservable& obs) {
  return {obs.projector(Outcome::plus), obs.projector(Outcome::minus), true};
}

KrausPair unsharp_kraus(const DichotomicObservable& obs, double lambda) {
  return {povm_root(obs, lambda, Outcome::plus), povm_root(obs, lambda, Outcome::minus),
          lambda == 1.0};
}

double kraus_completeness_residual(const KrausPair& k) {
  const CMatrix sum = adjoint(k.plus) * k.plus + adjoint(k.minus) * k.minus;
  return max_abs_diff(sum, CMatrix::identity(sum.dim()));
}

SwitchConfig SwitchConfig::projective(const DichotomicObservable& obs_i,
                                      const DichotomicObservable& obs_j) {
  SwitchConfig c;
  c.kraus_i = projective_kraus(obs_i);
  c.kraus_j = projective_kraus(obs_j);
  return c;
}

void SwitchConfig::validate() const {
  if (system_input.dim() != 2 || !system_input.is_normalized(Tolerances::identity)) {
    throw DomainError("switch system input must be a normalized qubit state");
  }
  for (const KrausPair* k : {&kraus_i, &kraus_j}) {
    if (k->plus.dim() != 2 || k->minus.dim() != 2) {
      throw DimensionError("switch Kraus operators must be 2x2");
    }
    if (kraus_completeness_residual(*k) > Tolerances::identity) {
      throw DomainError("switch Kraus family is incomplete: sum N^dagger N != I");
    }
  }
}

CVector polarization_plus() { return CVector{kInvSqrt2, kInvSqrt2}; }
CVector polarization_minus() { return CVector{kInvSqrt2, -kInvSqrt2}; }

CVector prepare_input(const SwitchConfig& config) {
  const CVector& s = config.system_input;
  if (s.dim() != 2 || !s.is_normalized(Tolerances::identity)) {
    throw DomainError("switch system input must be a normalized qubit state");
  }
  CVector out(4);
  if (config.routing == Routing::polarizing_beam_splitter) {
    out[composite_index(0, 0)] = s[0];
    out[composite_index(1, 1)] = s[1];
  } else {
    for (int path = 0; path < 2; ++path) {
      out[composite_index(path, 0)] = kInvSqrt2 * s[0];
      out[composite_index(path, 1)] = kInvSqrt2 * s[1];
    }
  }
  return out;
}

CVector apply_switch(const CVector& state, const SwitchConfig& config, Outcome m_i, Outcome m_j) {
  require_composite(state);
  const CMatrix& ni = config.kraus_i[m_i];
  const CMatrix& nj = config.kraus_j[m_j];
  CVector out(4);
  set_polarization(out, 0, (ni * nj) * polarization_of(state, 0));
  set_polarization(out, 1, (nj * ni) * polarization_of(state, 1));
  return out;
}

CVector apply_ps_and_bs(const CVector& state, const SwitchConfig& config) {
  require_composite(state);
  const Complex ph = std::exp(Complex{0.0, config.phases.arm_h});
  const Complex pv = std::exp(Complex{0.0, config.phases.arm_v});
  CVector out(4);
  for (int pol = 0; pol < 2; ++pol) {
    const Complex ch = ph * state[composite_index(0, pol)];
    const Complex cv = pv * state[composite_index(1, pol)];
    out[composite_index(0, pol)] = kInvSqrt2 * (ch + kI * cv);
    out[composite_index(1, pol)] = kInvSqrt2 * (kI * ch + cv);
  }
  for (int path = 0; path < 2; ++path) {
    const Complex h = out[composite_index(path, 0)];
    const Complex v = out[composite_index(path, 1)];
    out[composite_index(path, 0)] = kInvSqrt2 * (h + v);
    out[composite_index(path, 1)] = kInvSqrt2 * (h - v);
  }
  return out;
}

Complex SwitchRun::amplitude(int path, Outcome pol) const {
  if (path != 3 && path != 4) throw DomainError("output path must be 3 or 4");
  return final_state[composite_index(path - 3, bit(pol))];
}

SwitchRun run_switch(const SwitchConfig& config, Outcome m_i, Outcome m_j) {
  SwitchRun run;
  run.m_i = m_i;
  run.m_j = m_j;
  run.final_state = apply_ps_and_bs(apply_switch(prepare_input(config), config, m_i, m_j), config);
  return run;
}

QuasiprobReadout postselect_quasiprob(const SwitchRun& run, const SwitchConfig& config) {
  if (!config.kraus_i.projective || !config.kraus_j.projective) {
    throw DomainError("quasiprobability readout is only defined for projective channels");
  }
  if (std::abs(std::abs(inner(polarization_plus(), config.system_input)) - 1.0) >
      Tolerances::identity) {
    throw DomainError("quasiprobability readout needs the |+> system input");
  }
  QuasiprobReadout r;
  r.amplitude = run.amplitude(3, Outcome::plus);
  r.scale = config.routing == Routing::polarizing_beam_splitter ? std::numbers::sqrt2 : 1.0;
  r.value = r.scale * r.amplitude.real();
  r.imaginary = r.scale * r.amplitude.imag();
  return r;
}

double anticommutator_quasiprob(const SwitchConfig& config, Outcome m_i, Outcome m_j) {
  const CVector plus = polarization_plus();
  const CMatrix ac = anticommutator(config.kraus_i[m_i], config.kraus_j[m_j]);
  return 0.5 * inner(plus, ac * plus).real();
}

Complex commutator_cross_term(const SwitchConfig& config, Outcome m_i, Outcome m_j) {
  const CMatrix c = commutator(config.kraus_i[m_i], config.kraus_j[m_j]);
  return 0.5 * inner(polarization_plus(), c * polarization_minus());
}

std::size_t DetectorStatistics::index(Outcome m_i, Outcome m_j, int path, Outcome pol) {
  if (path != 3 && path != 4) throw DomainError("output path must be 3 or 4");
  return static_cast<std::size_t>(bit(m_i) * 8 + bit(m_j) * 4 + (path - 3) * 2 + bit(pol));
}

DetectorStatistics detector_statistics(const SwitchConfig& config) {
  config.validate();
  DetectorStatistics d;
  for (Outcome a : kOutcomes) {
    for (Outcome b : kOutcomes) {
      const SwitchRun run = run_switch(config, a, b);
      for (int path : {3, 4}) {
        for (Outcome pol : kOutcomes) {
          const double p = run.probability(path, pol);
          d.probability[DetectorStatistics::index(a, b, path, pol)] = p;
          d.total += p;
        }
      }
    }
  }
  return d;
}

ClosedFormCheck check_closed_form(const SwitchConfig& config, Outcome m_i, Outcome m_j) {
  const CMatrix& ni = config.kraus_i[m_i];
  const CMatrix& nj = config.kraus_j[m_j];
  const CMatrix anti = anticommutator(ni, nj);
  const CMatrix comm_ij = commutator(ni, nj);
  const CMatrix comm_ji = commutator(nj, ni);
  const CVector plus = polarization_plus();
  const CVector minus = polarization_minus();
  const Complex pre{1.0 / (2.0 * std::numbers::sqrt2), 0.0};

  const CVector v3 = pre * (anti * plus + comm_ij * minus);
  const CVector v4 = (kI * pre) * (comm_ji * plus - anti * minus);

  ClosedFormCheck c;
  c.closed_form = {inner(plus, v3), inner(minus, v3), inner(plus, v4), inner(minus, v4)};
  const SwitchRun run = run_switch(config, m_i, m_j);
  c.simulated = {run.amplitude(3, Outcome::plus), run.amplitude(3, Outcome::minus),
                 run.amplitude(4, Outcome::plus), run.amplitude(4, Outcome::minus)};

  auto fit = [&](std::size_t first, std::size_t last) {
    Complex z{};
    for (std::size_t k = first; k < last; ++k) z += std::conj(c.closed_form[k]) * c.simulated[k];
    const Complex phase = std::abs(z) > 0.0 ? z / std::abs(z) : Complex{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t k = first; k < last; ++k) {
      worst = std::max(worst, std::abs(c.simulated[k] - phase * c.closed_form[k]));
    }
    return worst;
  };

  for (std::size_t k = 0; k < 4; ++k) {
    c.slot_residual[k] = std::abs(c.simulated[k] - c.closed_form[k]);
    c.max_residual = std::max(c.max_residual, c.slot_residual[k]);
  }
  c.max_residual_up_to_global_phase = fit(0, 4);
  c.path3_residual_up_to_global_phase = fit(0, 2);
  return c;
}

}  // namespace lgsw
