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

// Acceptance run: one line per criterion, each measured against an oracle
// computed here rather than taken from the library under test.
//
//   lgsw_acceptance [--expect-fail N[,N...]]
//
// Exits 0 when the failing set equals the expected set (empty by default).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "../support/generators.hpp"
#include "lgswitch/commands.hpp"
#include "lgswitch/inequalities.hpp"
#include "lgswitch/switch_sim.hpp"
#include "lgswitch/three_time.hpp"
#include "lgswitch/two_time.hpp"
#include "lgswitch/verify.hpp"
#include "lgswitch/violation_search.hpp"

namespace {

using namespace lgsw;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260101;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Kraus root of (I + m lambda M)/2 from the spectral decomposition of M.
CMatrix unsharp_root(const DichotomicObservable& o, double lambda, Outcome m) {
  const double s = sign(m);
  return Complex(std::sqrt((1 + s * lambda) / 2)) * o.projector(Outcome::plus) +
         Complex(std::sqrt((1 - s * lambda) / 2)) * o.projector(Outcome::minus);
}

double half_anticommutator(const CMatrix& rho, const CMatrix& a, const CMatrix& b) {
  return 0.5 * trace(rho * (a * b + b * a)).real();
}

Verdict switch_formula() {
  const auto t0 = Clock::now();
  Rng rng(kSeed);
  double pi_h = 0, aligned = 0, coherent = 0;
  for (int n = 0; n < 1000; ++n) {
    const DichotomicObservable oi(testing::random_unit(rng)), oj(testing::random_unit(rng));
    const Outcome mi = testing::random_outcome(rng), mj = testing::random_outcome(rng);
    const CVector plus{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
    const CMatrix& pi = oi.projector(mi);
    const CMatrix& pj = oj.projector(mj);
    const double q = 0.5 * inner(plus, (pi * pj + pj * pi) * plus).real();

    SwitchConfig c = SwitchConfig::projective(oi, oj);
    const Complex amp_pi_h = run_switch(c, mi, mj).amplitude(3, Outcome::plus);
    c.phases = SwitchPhases::anticommutator_aligned();
    const Complex amp_aligned = run_switch(c, mi, mj).amplitude(3, Outcome::plus);
    c.routing = Routing::coherent_control;
    const Complex amp_coherent = run_switch(c, mi, mj).amplitude(3, Outcome::plus);

    pi_h = std::max(pi_h, std::abs(std::numbers::sqrt2 * amp_pi_h - q));
    aligned = std::max(aligned, std::abs(std::numbers::sqrt2 * amp_aligned - q));
    coherent = std::max(coherent, std::abs(amp_coherent - q));
  }
  const double t = seconds_since(t0);
  const double best_pbs = std::min(pi_h, aligned);
  return {best_pbs <= 1e-10 && t < 10,
          fmt("beam-splitter residual %.3g (aligned phases) / %.3g (pi on arm H), tol 1e-10; "
              "coherent-control |amp - q| %.2g; %.2f s",
              aligned, pi_h, coherent, t)};
}

Verdict sequential_identity() {
  // Unsharp first measurement, sharp readout of the second.
  Rng rng(kSeed + 2);
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    const double lambda = rng.uniform(1e-3, 1.0);
    const LGScenario s = testing::random_scenario(rng, false, lambda);
    const CMatrix& rho = s.state().rho();
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
      const DichotomicObservable& a = s.observable(i);
      const DichotomicObservable& b = s.observable(j);
      double from_joint = 0;
      for (Outcome m1 : kOutcomes)
        for (Outcome m2 : kOutcomes) {
          const CMatrix k = unsharp_root(a, lambda, m1);
          from_joint += sign(m1) * sign(m2) * trace(b.projector(m2) * k * rho * adjoint(k)).real();
        }
      const double oracle = lambda * half_anticommutator(rho, a.matrix(), b.matrix());
      worst = std::max({worst, std::abs(from_joint - oracle),
                        std::abs(sequential_correlation(s.state(), a, b, lambda) - oracle)});
    }
  }
  return {worst <= 1e-10, fmt("max |<AB>_seq - (lambda/2)Tr[rho{A,B}]| = %.3g over 1000 samples, tol 1e-10", worst)};
}

Verdict nsit() {
  Rng rng(kSeed + 3);
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    const LGScenario s = testing::random_scenario(rng);
    const CMatrix& rho = s.state().rho();
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
      const QuasiprobTable t = two_time_table(s, i, j);
      for (Outcome m : kOutcomes) {
        worst = std::max(worst, std::abs(t.marginal(2, m) - trace(rho * s.observable(j).projector(m)).real()));
        worst = std::max(worst, std::abs(t.marginal(1, m) - trace(rho * s.observable(i).projector(m)).real()));
      }
    }
    const QuasiprobTable t3 = triple_quasiprob(s);
    for (int pos = 1; pos <= 3; ++pos)
      for (Outcome m : kOutcomes)
        worst = std::max(worst, std::abs(t3.marginal(pos, m) - trace(rho * s.observable(pos).projector(m)).real()));
  }
  // |+>, sigma_z then sigma_x: P(m_x) after a z measurement is 1/2, unmeasured it is 1 or 0.
  const QuantumState plus = QuantumState::from_bloch({1, 0, 0});
  const DichotomicObservable z({0, 0, 1}), x({1, 0, 0});
  double gap = 0;
  for (Outcome m2 : kOutcomes) {
    double summed = 0;
    for (Outcome m1 : kOutcomes) {
      const CMatrix k = z.projector(m1);
      summed += trace(x.projector(m2) * k * plus.rho() * k).real();
    }
    gap = std::max(gap, std::abs(summed - plus.expectation(x.projector(m2))));
  }
  const double lib_gap = nsit_check_two_time(plus, z, x, 1.0).sequential_gap;
  return {worst <= 1e-12 && gap >= 0.4 && std::abs(lib_gap - gap) <= 1e-12,
          fmt("quasiprob marginal residual %.3g (tol 1e-12); sequential gap %.3g (need >= 0.4)", worst, gap)};
}

Verdict moment_expansion() {
  Rng rng(kSeed + 4);
  double form = 0, g2q = 0;
  for (int n = 0; n < 1000; ++n) {
    const LGScenario s = testing::random_scenario(rng);
    const CMatrix& rho = s.state().rho();
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
      const DichotomicObservable& a = s.observable(i);
      const DichotomicObservable& b = s.observable(j);
      for (Outcome mi : kOutcomes)
        for (Outcome mj : kOutcomes) {
          const double direct = (inner(a.eigenvector(mi), b.eigenvector(mj)) *
                                 inner(b.eigenvector(mj), rho * a.eigenvector(mi)))
                                    .real();
          const double si = sign(mi), sj = sign(mj);
          const double moments = 0.25 * (1 + si * s.state().expectation(a.matrix()) +
                                         sj * s.state().expectation(b.matrix()) +
                                         si * sj * half_anticommutator(rho, a.matrix(), b.matrix()));
          form = std::max({form, std::abs(moments - direct), std::abs(quasiprob_moment_form(s, i, j, mi, mj) - direct)});
          g2q = std::max(g2q, std::abs(g2(s, i, j, mi, mj) - 4 * direct));
        }
    }
  }
  return {form <= 1e-12 && g2q <= 1e-12,
          fmt("moment form vs Kirkwood real part %.3g, |G2 - 4q| %.3g, tol 1e-12", form, g2q)};
}

Verdict normalizations() {
  Rng rng(kSeed + 5);
  double two = 0, three = 0, det = 0;
  for (int n = 0; n < 1000; ++n) {
    const LGScenario s = testing::random_scenario(rng);
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) two = std::max(two, std::abs(two_time_table(s, i, j).total() - 1));
    three = std::max(three, std::abs(triple_quasiprob(s).total() - 1));
    SwitchConfig c;
    const double lambda = n % 2 ? 1.0 : rng.uniform01();
    c.kraus_i = unsharp_kraus(DichotomicObservable(testing::random_unit(rng)), lambda);
    c.kraus_j = unsharp_kraus(DichotomicObservable(testing::random_unit(rng)), lambda);
    c.system_input = testing::random_pure_vector(rng, 2);
    c.routing = n % 3 ? Routing::polarizing_beam_splitter : Routing::coherent_control;
    c.phases = {rng.uniform(0, 6.3), rng.uniform(0, 6.3)};
    const DetectorStatistics d = detector_statistics(c);
    double sum = 0;
    for (double p : d.probability) sum += p;
    det = std::max(det, std::abs(sum - 1));
  }
  return {two <= 1e-12 && three <= 1e-12 && det <= 1e-12,
          fmt("two-time %.3g, three-time %.3g, detectors %.3g, tol 1e-12", two, three, det)};
}

Verdict violation_search() {
  const auto t0 = Clock::now();
  SearchSpace k3_space;
  k3_space.fix(Param::purity, 0).equal_spacing(true).release(Param::angle12);
  const Objective k3_obj = objective_by_name("min_k3");
  const SearchResult g = grid_sweep(k3_space, k3_obj, 720);
  const SearchResult r = refine(k3_space, k3_obj, g.best_params, {1.0 / 720, 1e-12, 100000});
  const double t_k3 = seconds_since(t0);
  // 1-D scan oracle: K3(+,-,+) = 1 - 2 cos(theta) + cos(2 theta) for rho = I/2.
  double scan_min = 1e9, scan_theta = 0;
  for (int n = 0; n <= 360000; ++n) {
    const double th = 2 * std::numbers::pi * n / 360000;
    const double v = 1 - 2 * std::cos(th) + std::cos(2 * th);
    if (v < scan_min) scan_min = v, scan_theta = th;
  }
  const double theta = r.best_params[to_index(Param::angle12)];

  const auto t1 = Clock::now();
  SearchSpace q_space;
  q_space.equal_spacing(true).release(Param::state_theta).release(Param::state_phi).release(Param::angle12);
  const Objective q_obj = objective_by_name("min_q2");
  const SearchResult gq = grid_sweep(q_space, q_obj, 24);
  const SearchResult rq = refine(q_space, q_obj, gq.best_params, {1.0 / 24, 1e-12, 100000});
  const double t_q = seconds_since(t1);
  // Coplanar pure-state oracle: with half-angles x between |m_i> and |m_j>
  // and y between |m_j> and |psi>, q = cos(x) cos(y) cos(x + y).
  double q_oracle = 1e9;
  for (int a = 0; a <= 3000; ++a)
    for (int b = 0; b <= 3000; ++b) {
      const double x = std::numbers::pi * a / 3000, y = std::numbers::pi * b / 3000;
      q_oracle = std::min(q_oracle, std::cos(x) * std::cos(y) * std::cos(x + y));
    }

  const bool ok = std::abs(r.best_value - scan_min) <= 1e-6 && std::abs(r.best_value + 0.5) <= 1e-6 &&
                  std::abs(theta - std::numbers::pi / 3) <= 1e-4 && std::abs(scan_theta - std::numbers::pi / 3) <= 1e-4 &&
                  std::abs(rq.best_value - q_oracle) <= 1e-6 && std::abs(rq.best_value + 0.125) <= 1e-6 && t_k3 < 60 && t_q < 60;
  return {ok, fmt("min K3 %.9f at theta %.7f (scan %.9f at %.7f); min q %.9f (scan %.9f); %.2f s / %.2f s",
                  r.best_value, theta, scan_min, scan_theta, rq.best_value, q_oracle, t_k3, t_q)};
}

Verdict weak_value() {
  Rng rng(kSeed + 7);
  double worst = 0;
  std::size_t used = 0;
  for (int n = 0; n < 1000; ++n) {
    const LGScenario s = testing::random_scenario(rng, true);
    const CVector& psi = s.state().vector();
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}})
      for (Outcome mi : kOutcomes)
        for (Outcome mj : kOutcomes) {
          const CVector& post = s.observable(j).eigenvector(mj);
          const Complex overlap = inner(post, psi);
          if (std::norm(overlap) <= 1e-12) continue;
          const Complex w = inner(post, s.observable(i).projector(mi) * psi) / overlap;
          const double q = mh_quasiprob(s, i, j, mi, mj).mh;
          const Complex lib = weak_value_projector(s.state(), s.observable(i).basis(), s.observable(j).basis(), mi, mj);
          worst = std::max({worst, std::abs(w.real() * std::norm(overlap) - q), std::abs(lib - w)});
          ++used;
        }
  }
  // |0>, projectors at polar angle 2pi/3 on opposite azimuths.
  const QuantumState zero = QuantumState::from_bloch({0, 0, 1});
  const double t = 2 * std::numbers::pi / 3;
  const DichotomicObservable oi = DichotomicObservable::from_angles(t, 0), oj = DichotomicObservable::from_angles(t, std::numbers::pi);
  const double q = mh_quasiprob(zero, oi.basis(), oj.basis(), Outcome::plus, Outcome::plus).mh;
  const Complex w = weak_value_projector(zero, oi.basis(), oj.basis(), Outcome::plus, Outcome::plus);
  const bool witness = std::abs(q + 0.125) <= 1e-12 && std::abs(w - Complex(-0.5, 0)) <= 1e-12 &&
                       is_anomalous_projector_weak_value(w, 1e-12);
  return {worst <= 1e-12 && witness,
          fmt("max |Re(pi)_w |<psi|m_j>|^2 - q| %.3g over %zu entries; witness q %.6g, weak value %.6g%+.2gi", worst, used,
              q, w.real(), w.imag())};
}

Verdict triple_pairs() {
  Rng rng(kSeed + 8);
  double p23 = 0, p13 = 0, p12 = 0;
  for (int n = 0; n < 1000; ++n) {
    const LGScenario s = testing::random_scenario(rng);
    const QuasiprobTable t = triple_quasiprob(s);
    const CMatrix& rho = s.state().rho();
    auto corr = [&](int a, int b) {
      double c = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        const auto m = t.tuple(k);
        c += sign(m[a - 1]) * sign(m[b - 1]) * t.value_at(k);
      }
      return c;
    };
    auto anti = [&](int a, int b) { return half_anticommutator(rho, s.observable(a).matrix(), s.observable(b).matrix()); };
    p23 = std::max(p23, std::abs(corr(2, 3) - anti(2, 3)));
    p13 = std::max(p13, std::abs(corr(1, 3) - anti(1, 3)));
    p12 = std::max(p12, std::abs(corr(1, 2) - anti(1, 2)));
  }
  return {p23 <= 1e-10 && p13 <= 1e-10,
          fmt("pair (2,3) %.3g, pair (1,3) %.3g, tol 1e-10; pair (1,2) measured %.3g", p23, p13, p12)};
}

Verdict implication_survey_check() {
  SearchSpace space;
  for (Param p : {Param::state_theta, Param::state_phi, Param::purity, Param::axis_theta, Param::axis_phi,
                  Param::angle12, Param::angle23})
    space.release(p);
  const SurveyReport r = implication_survey(space, 10000, kSeed);
  // Recompute the persisted witnesses from their parameters.
  std::size_t confirmed = 0;
  for (const auto& w : r.g3_witnesses) {
    const LgiEvaluation e = evaluate_inequalities(SearchSpace::scenario(w.params));
    if (e.min_g3() < 0 && e.min_g2() >= 0 && e.min_k3() >= 0) ++confirmed;
  }
  std::size_t checked_negative = 0, missed = 0;
  Rng rng(kSeed + 9);
  for (int n = 0; n < 10000; ++n) {
    const LGScenario s = SearchSpace::scenario(sample_point(space, rng));
    const QuasiprobTable t = triple_quasiprob(s);
    for (const auto& p : k3_patterns()) {
      const double first = t.value({p.m1, flip(p.m2), p.m3});
      const double second = t.value({flip(p.m1), p.m2, flip(p.m3)});
      if (first < 0 && second < 0) {
        ++checked_negative;
        double lowest = 1e9;
        for (const auto& k : k3_patterns()) lowest = std::min(lowest, k3(s, k.m1, k.m2, k.m3));
        if (lowest >= 0) ++missed;
      }
    }
  }
  const bool ok = r.samples == 10000 && r.counterexamples.empty() && missed == 0 && !r.g3_witnesses.empty() &&
                  confirmed == r.g3_witnesses.size();
  return {ok, fmt("%zu both-negative cases, %zu counterexamples; %zu G3-only witnesses (%zu recomputed, "
                  "%zu with the moment-expansion G3); independent draw: %zu both-negative, %zu counterexamples",
                  r.both_negative_cases, r.counterexamples.size(), r.g3_witnesses.size(), confirmed,
                  r.g3_moment_witnesses, checked_negative, missed)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "lgsw-acceptance-determinism";
  fs::remove_all(root);
  std::string text[2];
  for (int k = 0; k < 2; ++k) {
    cli::CommandOptions o;
    o.command = "verify";
    o.out = root / std::to_string(k);
    o.seed = kSeed;
    std::ostringstream out, err;
    if (cli::run_command(o, out, err) != cli::kExitOk) return {false, "verify failed: " + out.str() + err.str()};
    text[k] = out.str();
    text[k] = text[k].substr(0, text[k].rfind("wrote"));
  }
  const bool json_same = slurp(root / "0" / "result.json") == slurp(root / "1" / "result.json");
  const bool csv_same = slurp(root / "0" / "table.csv") == slurp(root / "1" / "table.csv");
  const bool text_same = text[0] == text[1];
  return {json_same && csv_same && text_same, fmt("result.json %s, table.csv %s, report text %s",
                                                  json_same ? "identical" : "DIFFERS", csv_same ? "identical" : "DIFFERS",
                                                  text_same ? "identical" : "DIFFERS")};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--expect-fail" && a + 1 < argc) {
      std::stringstream list(argv[++a]);
      for (std::string item; std::getline(list, item, ',');) expected.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N[,N...]]\n", argv[0]);
      return 2;
    }
  }

  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"switch readout equals anticommutator quasiprobability", switch_formula},
      {"sequential correlation equals scaled anticommutator", sequential_identity},
      {"quasiprobability marginals are non-invasive", nsit},
      {"moment expansion equals Kirkwood real part; G2 = 4q", moment_expansion},
      {"normalizations", normalizations},
      {"violation search minima", violation_search},
      {"weak-value identity and -1/8 witness", weak_value},
      {"three-time pair correlations", triple_pairs},
      {"combination implication survey", implication_survey_check},
      {"verify determinism", determinism},
  };

  std::set<int> failed;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(index);
    std::printf("criterion %2d %s  %s: %s\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of 10 criteria pass", 10 - failed.size());
  if (!expected.empty()) {
    std::printf("; expected failures:");
    for (int e : expected) std::printf(" %d", e);
  }
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
