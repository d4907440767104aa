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

#include "lgswitch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "lgswitch/errors.hpp"
#include "lgswitch/inequalities.hpp"
#include "lgswitch/switch_sim.hpp"
#include "lgswitch/three_time.hpp"
#include "lgswitch/tolerances.hpp"
#include "lgswitch/two_time.hpp"

namespace lgsw::cli {

namespace {

// Worst residual seen so far, with the scenario that produced it. A NaN
// residual sticks and fails the check.
class Worst {
 public:
  void add(double r, const std::optional<ParamVector>& at = std::nullopt) {
    ++samples_;
    if (std::isnan(worst_)) return;
    if (std::isnan(r) || r > worst_ || samples_ == 1) {
      worst_ = r;
      at_ = at;
    }
  }
  double value() const { return worst_; }
  std::size_t samples() const { return samples_; }
  const std::optional<ParamVector>& at() const { return at_; }

 private:
  double worst_ = 0.0;
  std::size_t samples_ = 0;
  std::optional<ParamVector> at_;
};

class Suite {
 public:
  explicit Suite(const VerifySettings& s) : settings_(s) {}

  void at_most(const std::string& name, const Worst& w, double tol, std::string detail = {}) {
    push(name, true, Comparison::at_most, w, settings_.tolerance.value_or(tol), std::move(detail));
  }
  void at_least(const std::string& name, const Worst& w, double bound, std::string detail = {}) {
    push(name, true, Comparison::at_least, w, bound, std::move(detail));
  }
  void claim(const std::string& name, const Worst& w, double tol, std::string detail = {}) {
    push(name, false, Comparison::at_most, w, tol, std::move(detail));
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  void push(const std::string& name, bool invariant, Comparison cmp, const Worst& w, double tol,
            std::string detail) {
    CheckResult c;
    c.name = name;
    c.invariant = invariant;
    c.comparison = cmp;
    c.measured = w.value();
    c.tolerance = tol;
    c.samples = w.samples();
    c.worst = w.at();
    c.detail = std::move(detail);
    c.passed = !std::isnan(c.measured) &&
               (cmp == Comparison::at_most ? c.measured <= tol : c.measured >= tol);
    checks_.push_back(std::move(c));
  }

  const VerifySettings& settings_;
  std::vector<CheckResult> checks_;
};

SearchSpace full_space() {
  SearchSpace s;
  for (std::size_t k = 0; k < kParamCount; ++k) s.release(static_cast<Param>(k));
  return s;
}

BlochVector random_unit(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Outcome random_outcome(Rng& rng) { return (rng.next() >> 63) ? Outcome::minus : Outcome::plus; }

const char* label(Comparison c) { return c == Comparison::at_most ? "<=" : ">="; }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.invariant || c.passed; });
}

std::string VerifyReport::text() const {
  std::string out;
  char buf[256];
  std::size_t inv_pass = 0, inv_fail = 0, claims_held = 0, claims_refuted = 0;
  for (const auto& c : checks) {
    const char* status = c.invariant ? (c.passed ? "PASS " : "FAIL ") : (c.passed ? "HOLDS" : "REFUTED");
    std::snprintf(buf, sizeof buf, "%-7s %-54s %s %s %s  n=%zu\n", status, c.name.c_str(),
                  format_number(c.measured).c_str(), label(c.comparison), format_number(c.tolerance).c_str(),
                  c.samples);
    out += buf;
    if (!c.passed && c.worst) {
      out += "        at";
      for (std::size_t k = 0; k < kParamCount; ++k) {
        out += " ";
        out += param_name(static_cast<Param>(k));
        out += "=" + format_number((*c.worst)[k]);
      }
      out += "\n";
    }
    if (!c.detail.empty()) out += "        " + c.detail + "\n";
    if (c.invariant) {
      (c.passed ? inv_pass : inv_fail)++;
    } else {
      (c.passed ? claims_held : claims_refuted)++;
    }
  }
  std::snprintf(buf, sizeof buf,
                "verify seed=%llu scenarios=%zu survey=%zu: %zu invariants passed, %zu failed; "
                "%zu claims held, %zu refuted\n",
                static_cast<unsigned long long>(settings.seed), settings.scenarios, settings.survey_samples,
                inv_pass, inv_fail, claims_held, claims_refuted);
  out += buf;
  return out;
}

Json VerifyReport::json() const {
  Json j = Json::object();
  j["command"] = "verify";
  j["seed"] = settings.seed;
  j["scenarios"] = settings.scenarios;
  j["survey_samples"] = settings.survey_samples;
  j["passed"] = passed();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json e = Json::object();
    e["name"] = c.name;
    e["kind"] = c.invariant ? "invariant" : "claim";
    e["comparison"] = label(c.comparison);
    e["measured"] = number(c.measured);
    e["tolerance"] = number(c.tolerance);
    e["samples"] = c.samples;
    e["passed"] = c.passed;
    if (c.worst) e["worst"] = params_json(*c.worst);
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(e);
  }
  j["checks"] = list;
  Json witnesses = Json::array();
  for (const auto& w : survey.g3_witnesses)
    witnesses.push_back(Json{{"sample", w.sample},
                             {"min_g3", number(w.min_g3)},
                             {"min_g2", number(w.min_g2)},
                             {"min_k3", number(w.min_k3)},
                             {"params", params_json(w.params)}});
  Json counter = Json::array();
  for (const auto& c : survey.counterexamples)
    counter.push_back(Json{{"sample", c.sample},
                           {"pattern", c.pattern},
                           {"q_first", number(c.combo.first)},
                           {"q_second", number(c.combo.second)},
                           {"min_k3", number(c.min_k3)},
                           {"params", params_json(c.params)}});
  j["survey"] = Json{{"samples", survey.samples},
                     {"seed", survey.seed},
                     {"both_negative_cases", survey.both_negative_cases},
                     {"counterexamples", counter},
                     {"g3_witness_count", survey.g3_witnesses.size()},
                     {"g3_moment_expansion_witness_count", survey.g3_moment_witnesses},
                     {"min_q2", number(survey.min_q2)},
                     {"min_q3", number(survey.min_q3)},
                     {"g3_witnesses", witnesses}};
  return j;
}

CsvTable VerifyReport::table() const {
  CsvTable t({"check", "kind", "measured", "comparison", "tolerance", "samples", "passed"});
  for (const auto& c : checks)
    t.add_row({c.name, c.invariant ? "invariant" : "claim", format_number(c.measured), label(c.comparison),
               format_number(c.tolerance), std::to_string(c.samples), c.passed ? "1" : "0"});
  return t;
}

VerifyReport run_verify(const VerifySettings& settings) {
  VerifyReport report;
  report.settings = settings;
  Suite suite(settings);
  Rng rng(settings.seed);
  const SearchSpace space = full_space();

  Worst norm2, norm3, nsit2, born3, pairs3, seq_corr, moment, g2_4q, weak, corr23, corr13, corr12, chain,
      combo, pure_form;
  std::size_t weak_skipped = 0;
  for (std::size_t n = 0; n < settings.scenarios; ++n) {
    const ParamVector p = sample_point(space, rng);
    const LGScenario s = SearchSpace::scenario(p);
    for (const auto& [i, j] : kTimePairs) {
      const QuasiprobTable t = two_time_table(s, i, j);
      norm2.add(std::abs(t.total() - 1.0), p);
      const NsitReport nr = nsit_check_two_time(s, i, j);
      nsit2.add(std::max(nr.quasi_residual_later, nr.quasi_residual_earlier), p);
      seq_corr.add(sequential_correlation_routes(s.state(), s.observable(i), s.observable(j), s.lambda())
                         .residual(),
                     p);
      for (Outcome a : kOutcomes)
        for (Outcome b : kOutcomes) {
          const double q = t.value({a, b});
          moment.add(std::abs(quasiprob_moment_form(s, i, j, a, b) - q), p);
          g2_4q.add(std::abs(g2(s, i, j, a, b) - 4.0 * q), p);
        }
    }
    const QuasiprobTable t3 = triple_quasiprob(s);
    norm3.add(std::abs(t3.total() - 1.0), p);
    const TripleMarginalReport mr = triple_marginals(t3, s.state(), s.observable(1), s.observable(2),
                                                     s.observable(3));
    born3.add(*std::max_element(mr.born_residual.begin(), mr.born_residual.end()), p);
    pairs3.add(std::max({mr.pair12.vs_margenau_hill, mr.pair23.vs_margenau_hill, mr.pair13.vs_margenau_hill}), p);
    corr23.add(std::abs(triple_correlation(t3, 2, 3) - symmetrized_correlation(s, 2, 3)), p);
    corr13.add(std::abs(triple_correlation(t3, 1, 3) - symmetrized_correlation(s, 1, 3)), p);
    corr12.add(std::abs(triple_correlation(t3, 1, 2) - symmetrized_correlation(s, 1, 2)), p);
    chain.add(s.heisenberg_chain_residual(), p);
    for (const auto& k : k3_patterns()) {
      const ComboValues c = combo_inequality(t3, k.m1, k.m2, k.m3);
      combo.add(std::abs(c.sum - k3(s, k.m1, flip(k.m2), k.m3) / 4.0), p);
    }

    // Pure-state identities on the same draw with the Bloch vector at unit length.
    ParamVector pp = p;
    pp[to_index(Param::purity)] = 1.0;
    const LGScenario sp = SearchSpace::scenario(pp);
    for (const auto& [i, j] : kTimePairs)
      for (Outcome a : kOutcomes)
        for (Outcome b : kOutcomes) {
          const CVector& mj = sp.observable(j).eigenvector(b);
          const double overlap = std::norm(inner(mj, sp.state().vector()));
          if (overlap <= Tolerances::overlap) {
            ++weak_skipped;
            continue;
          }
          const Complex w =
              weak_value_projector(sp.state(), sp.observable(i).basis(), sp.observable(j).basis(), a, b);
          weak.add(std::abs(w.real() * overlap - mh_quasiprob(sp, i, j, a, b).mh), pp);
        }
    try {
      pure_form.add(compare_pure_form(sp.state(), sp.observable(1).basis(), sp.observable(2).basis(),
                                      sp.observable(3).basis())
                        .max_discrepancy,
                    pp);
    } catch (const DomainError&) {
    }
  }

  suite.at_most("normalization.two_time", norm2, Tolerances::identity);
  suite.at_most("normalization.three_time", norm3, Tolerances::identity);
  suite.at_most("nsit.two_time_quasiprob_marginals", nsit2, Tolerances::identity);
  suite.at_most("nsit.three_time_single_marginals", born3, Tolerances::identity);
  suite.at_most("nsit.three_time_pair_marginals", pairs3, Tolerances::identity);

  {
    // |+x>, sigma_z then sigma_x: the earlier measurement shifts the later
    // marginal by 1/2.
    Worst gap;
    const QuantumState plus = QuantumState::from_bloch({1, 0, 0});
    gap.add(nsit_check_two_time(plus, DichotomicObservable({0, 0, 1}), DichotomicObservable({1, 0, 0}), 1.0)
                .sequential_gap);
    suite.at_least("nsit.sequential_gap_exists", gap, 0.4);
  }

  suite.at_most("sequential_correlation.lambda_anticommutator", seq_corr, Tolerances::pipeline);
  suite.at_most("moment_expansion.quasiprob", moment, Tolerances::identity);
  suite.at_most("moment_expansion.g2_equals_4q", g2_4q, Tolerances::identity);
  suite.at_most("weak_value.identity", weak, Tolerances::identity,
                weak_skipped ? "skipped " + std::to_string(weak_skipped) + " near-orthogonal post-selections"
                             : std::string{});
  {
    const QuantumState zero = QuantumState::from_bloch({0, 0, 1});
    const double t = 2.0 * std::numbers::pi / 3.0;
    const DichotomicObservable oi = DichotomicObservable::from_angles(t, 0.0);
    const DichotomicObservable oj = DichotomicObservable::from_angles(t, std::numbers::pi);
    const KirkwoodValue kv = mh_quasiprob(zero, oi.basis(), oj.basis(), Outcome::plus, Outcome::plus);
    const Complex w = weak_value_projector(zero, oi.basis(), oj.basis(), Outcome::plus, Outcome::plus);
    Worst witness;
    witness.add(std::max(std::abs(kv.mh + 0.125), std::abs(w - Complex(-0.5, 0.0))));
    suite.at_most("weak_value.minus_one_eighth_witness", witness, Tolerances::identity);
  }
  suite.at_most("correlation.three_time_pair23", corr23, Tolerances::pipeline);
  suite.at_most("correlation.three_time_pair13", corr13, Tolerances::pipeline);
  suite.claim("correlation.three_time_pair12", corr12, Tolerances::pipeline);
  suite.at_most("heisenberg.chain_composition", chain, Tolerances::pipeline);
  suite.at_most("combination.sum_equals_quarter_k3", combo, Tolerances::identity);
  suite.claim("claim.triple_pure_form_matches_direct", pure_form, Tolerances::identity,
              "pure-state product form orders the projectors differently");

  Worst total, coherent, decomposition, claim_aligned, claim_pi_h, closed_form;
  for (std::size_t n = 0; n < settings.scenarios; ++n) {
    const DichotomicObservable oi(random_unit(rng)), oj(random_unit(rng));
    const Outcome mi = random_outcome(rng), mj = random_outcome(rng);
    SwitchConfig pbs = SwitchConfig::projective(oi, oj);
    pbs.phases = SwitchPhases::anticommutator_aligned();
    SwitchConfig coh = pbs;
    coh.routing = Routing::coherent_control;
    SwitchConfig pi_h = pbs;
    pi_h.phases = SwitchPhases::pi_on_h();

    total.add(std::max({std::abs(detector_statistics(pbs).total - 1.0),
                        std::abs(detector_statistics(coh).total - 1.0),
                        std::abs(detector_statistics(pi_h).total - 1.0)}));
    const double q = anticommutator_quasiprob(pbs, mi, mj);
    auto readout = [&](const SwitchConfig& c) {
      const QuasiprobReadout r = postselect_quasiprob(run_switch(c, mi, mj), c);
      return Complex(r.value, r.imaginary);
    };
    const Complex r_pbs = readout(pbs);
    coherent.add(std::abs(readout(coh) - q));
    decomposition.add(std::abs(r_pbs - (q + commutator_cross_term(pbs, mi, mj))));
    claim_aligned.add(std::abs(r_pbs - q));
    claim_pi_h.add(std::abs(readout(pi_h) - q));
    closed_form.add(check_closed_form(pi_h, mi, mj).max_residual_up_to_global_phase);
  }
  suite.at_most("switch.detector_probability_total", total, Tolerances::identity);
  suite.at_most("switch.coherent_control_readout_equals_q", coherent, Tolerances::pipeline);
  suite.at_most("switch.beam_splitter_readout_equals_q_plus_commutator", decomposition, Tolerances::pipeline);
  suite.claim("claim.switch_beam_splitter_readout_equals_q", claim_aligned, Tolerances::pipeline,
              "aligned phases; the commutator term survives unless the projectors commute");
  suite.claim("claim.switch_beam_splitter_pi_h_phases", claim_pi_h, Tolerances::pipeline);
  suite.claim("claim.switch_closed_form_pi_h_phases", closed_form, Tolerances::pipeline,
              "pi on arm H, compared up to a global phase");

  {
    SearchSpace k3_space;
    k3_space.fix(Param::purity, 0.0).release(Param::angle12).equal_spacing(true);
    const Objective obj = objective_by_name("min_k3");
    const SearchResult grid = grid_sweep(k3_space, obj, 720);
    const SearchResult best = refine(k3_space, obj, grid.best_params, {1.0 / 720.0, 1e-9, 100000});
    Worst value, angle;
    value.add(std::abs(best.best_value + 0.5), best.best_params);
    angle.add(std::abs(best.best_params[to_index(Param::angle12)] - std::numbers::pi / 3.0), best.best_params);
    suite.at_most("search.min_k3_value", value, 1e-6);
    suite.at_most("search.min_k3_angle", angle, 1e-4);
  }

  report.survey = implication_survey(space, settings.survey_samples, settings.seed);
  {
    Worst counter;
    counter.add(static_cast<double>(report.survey.counterexamples.size()));
    suite.at_most("survey.combination_counterexamples", counter, 0.0);
    Worst witnesses;
    witnesses.add(static_cast<double>(report.survey.g3_witnesses.size()));
    suite.at_least("survey.g3_only_violation_witnesses", witnesses, 1.0);
  }

  report.checks = suite.take();
  return report;
}

}  // namespace lgsw::cli
