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

#include "lgswitch/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lgswitch/errors.hpp"
#include "lgswitch/inequalities.hpp"
#include "lgswitch/three_time.hpp"
#include "lgswitch/tolerances.hpp"
#include "lgswitch/two_time.hpp"
#include "lgswitch/verify.hpp"
#include "lgswitch/violation_search.hpp"

namespace lgsw::cli {

namespace {

// Values below -kViolation count as violated; rounding noise around an
// exact zero does not.
constexpr double kViolation = Tolerances::identity;

std::string sign_char(Outcome m) { return m == Outcome::plus ? "+" : "-"; }
int sign_int(Outcome m) { return static_cast<int>(m); }

Json bloch_json(const BlochVector& b) { return Json::array({number(b[0]), number(b[1]), number(b[2])}); }

Json scenario_json(const RunConfig& c, const LGScenario& s) {
  Json j = Json::object();
  j["state"] = Json{{"theta", number(c.state.theta)},
                    {"phi", number(c.state.phi)},
                    {"purity", number(c.state.purity)}};
  j["hamiltonian"] = Json{{"axis", bloch_json(c.hamiltonian.axis)}, {"omega", number(c.hamiltonian.omega)}};
  j["times"] = Json::array({number(c.times.t1), number(c.times.t2), number(c.times.t3)});
  j["lambda"] = number(c.lambda);
  Json obs = Json::array();
  for (int k = 1; k <= 3; ++k) obs.push_back(bloch_json(s.observable(k).bloch()));
  j["observables"] = obs;
  return j;
}

Json search_result_json(const SearchResult& r) {
  Json j = Json::object();
  j["objective"] = r.objective;
  j["best_value"] = number(r.best_value);
  j["best_params"] = params_json(r.best_params);
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  j["final_step"] = number(r.final_step);
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back(Json{{"evaluation", t.evaluation}, {"value", number(t.value)}, {"params", params_json(t.params)}});
  j["trace"] = trace;
  return j;
}

}  // namespace

RunOutput cmd_quasiprob(const RunConfig& config) {
  const LGScenario s = config.scenario();
  RunOutput out;
  out.table = CsvTable({"kind", "pair", "m1", "m2", "m3", "re", "im", "negative"});
  Json& r = out.result;
  r["command"] = "quasiprob";
  r["scenario"] = scenario_json(config, s);

  Json pairs = Json::array();
  for (const auto& [i, j] : kTimePairs) {
    const QuasiprobTable t = two_time_table(s, i, j);
    Json entries = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) {
      const auto m = t.tuple(k);
      const bool negative = t.value_at(k) < -kViolation;
      entries.push_back(Json{{"m_i", sign_int(m[0])},
                             {"m_j", sign_int(m[1])},
                             {"kirkwood", complex_json(t.kirkwood_at(k))},
                             {"q", number(t.value_at(k))},
                             {"negative", negative}});
      out.table.add_row({"two_time", std::to_string(i) + std::to_string(j), sign_char(m[0]),
                         sign_char(m[1]), "", format_number(t.kirkwood_at(k).real()),
                         format_number(t.kirkwood_at(k).imag()), negative ? "1" : "0"});
    }
    Json marg = Json::object();
    for (Outcome m : kOutcomes) {
      marg[sign_char(m)] = Json{{"first", number(t.marginal(1, m))},
                                {"second", number(t.marginal(2, m))},
                                {"born_first", number(s.state().expectation(s.observable(i).projector(m)))},
                                {"born_second", number(s.state().expectation(s.observable(j).projector(m)))}};
    }
    pairs.push_back(Json{{"pair", Json::array({i, j})},
                         {"entries", entries},
                         {"sum", number(t.total())},
                         {"min", number(t.min_value())},
                         {"negative", t.min_value() < -kViolation},
                         {"marginals", marg}});
  }
  r["two_time"] = pairs;

  const QuasiprobTable t3 = triple_quasiprob(s);
  Json entries = Json::array();
  for (std::size_t k = 0; k < t3.size(); ++k) {
    const auto m = t3.tuple(k);
    const bool negative = t3.value_at(k) < -kViolation;
    entries.push_back(Json{{"m", Json::array({sign_int(m[0]), sign_int(m[1]), sign_int(m[2])})},
                           {"kirkwood", complex_json(t3.kirkwood_at(k))},
                           {"q", number(t3.value_at(k))},
                           {"negative", negative}});
    out.table.add_row({"three_time", "123", sign_char(m[0]), sign_char(m[1]), sign_char(m[2]),
                       format_number(t3.kirkwood_at(k).real()), format_number(t3.kirkwood_at(k).imag()),
                       negative ? "1" : "0"});
  }
  const TripleMarginalReport mr = triple_marginals(s);
  auto pair_json = [](const PairMarginalResiduals& p) {
    return Json{{"vs_margenau_hill", number(p.vs_margenau_hill)}, {"vs_sequential", number(p.vs_sequential)}};
  };
  Json three = Json::object();
  three["entries"] = entries;
  three["sum"] = number(t3.total());
  three["min"] = number(t3.min_value());
  three["negative"] = t3.min_value() < -kViolation;
  three["born_residual"] = Json::array({number(mr.born_residual[0]), number(mr.born_residual[1]),
                                        number(mr.born_residual[2])});
  three["pair_marginal_residual"] =
      Json{{"12", pair_json(mr.pair12)}, {"23", pair_json(mr.pair23)}, {"13", pair_json(mr.pair13)}};
  if (s.state().is_pure()) {
    try {
      const PureFormComparison pf = compare_pure_form(s.state(), s.observable(1).basis(),
                                                      s.observable(2).basis(), s.observable(3).basis());
      three["pure_form"] = Json{{"max_discrepancy", number(pf.max_discrepancy)}, {"agrees", pf.agrees}};
    } catch (const DomainError& e) {
      three["pure_form"] = Json{{"unavailable", e.what()}};
    }
  }
  r["three_time"] = three;
  return out;
}

RunOutput cmd_lgi(const RunConfig& config) {
  const LGScenario s = config.scenario();
  const LgiEvaluation e = evaluate_inequalities(s);
  RunOutput out;
  out.table = CsvTable({"family", "pair", "m1", "m2", "m3", "value", "violated"});
  Json& r = out.result;
  r["command"] = "lgi";
  r["scenario"] = scenario_json(config, s);
  auto flag = [](double v) { return v < -kViolation; };

  Json g2s = Json::array();
  std::size_t n = 0;
  for (const auto& [i, j] : kTimePairs) {
    for (Outcome a : kOutcomes) {
      for (Outcome b : kOutcomes) {
        const double v = e.g2[n++];
        g2s.push_back(Json{{"pair", Json::array({i, j})},
                           {"m_i", sign_int(a)},
                           {"m_j", sign_int(b)},
                           {"value", number(v)},
                           {"q", number(mh_quasiprob(s, i, j, a, b).mh)},
                           {"violated", flag(v)}});
        out.table.add_row({"G2", std::to_string(i) + std::to_string(j), sign_char(a), sign_char(b), "",
                           format_number(v), flag(v) ? "1" : "0"});
      }
    }
  }
  r["g2"] = g2s;

  Json k3s = Json::array();
  Json combos = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& p = k3_patterns()[k];
    const double v = e.k3[k];
    k3s.push_back(Json{{"m", Json::array({sign_int(p.m1), sign_int(p.m2), sign_int(p.m3)})},
                       {"value", number(v)},
                       {"violated", flag(v)}});
    out.table.add_row({"K3", "", sign_char(p.m1), sign_char(p.m2), sign_char(p.m3), format_number(v),
                       flag(v) ? "1" : "0"});
    const ComboValues& c = e.combo[k];
    const double k3_flipped = k3(s, p.m1, flip(p.m2), p.m3);
    combos.push_back(Json{{"m", Json::array({sign_int(p.m1), sign_int(p.m2), sign_int(p.m3)})},
                          {"q_first", number(c.first)},
                          {"q_second", number(c.second)},
                          {"sum", number(c.sum)},
                          {"k3_quarter", number(k3_flipped / 4.0)},
                          {"both_negative", c.both_negative},
                          {"violated", c.both_negative}});
    out.table.add_row({"combination", "", sign_char(p.m1), sign_char(p.m2), sign_char(p.m3),
                       format_number(c.sum), c.both_negative ? "1" : "0"});
  }
  r["k3"] = k3s;

  Json g3s = Json::array();
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& p = sign_triples()[k];
    g3s.push_back(Json{{"m", Json::array({sign_int(p.m1), sign_int(p.m2), sign_int(p.m3)})},
                       {"value", number(e.g3[k])},
                       {"violated", flag(e.g3[k])},
                       {"moment_expansion", number(e.g3_moment_expansion[k])},
                       {"moment_expansion_violated", flag(e.g3_moment_expansion[k])}});
    out.table.add_row({"G3", "", sign_char(p.m1), sign_char(p.m2), sign_char(p.m3), format_number(e.g3[k]),
                       flag(e.g3[k]) ? "1" : "0"});
  }
  r["g3"] = g3s;
  r["combination"] = combos;
  r["summary"] = Json{{"min_g2", number(e.min_g2())},
                      {"min_k3", number(e.min_k3())},
                      {"min_g3", number(e.min_g3())},
                      {"g2_violated", flag(e.min_g2())},
                      {"k3_violated", flag(e.min_k3())},
                      {"g3_violated", flag(e.min_g3())},
                      {"g3_moment_expansion_violated",
                       flag(*std::min_element(e.g3_moment_expansion.begin(), e.g3_moment_expansion.end()))},
                      {"combination_violated", e.any_combo_both_negative()}};
  return out;
}

RunOutput cmd_switch(const RunConfig& config) {
  const SwitchConfig sc = config.switch_config();
  const Outcome mi = config.switch_block.m_i, mj = config.switch_block.m_j;
  const SwitchRun run = run_switch(sc, mi, mj);
  const QuasiprobReadout readout = postselect_quasiprob(run, sc);
  const double q = anticommutator_quasiprob(sc, mi, mj);
  const Complex cross = commutator_cross_term(sc, mi, mj);
  const DetectorStatistics stats = detector_statistics(sc);
  const ClosedFormCheck cf = check_closed_form(sc, mi, mj);

  RunOutput out;
  out.table = CsvTable({"m_i", "m_j", "path", "pol", "probability"});
  Json& r = out.result;
  r["command"] = "switch";
  r["routing"] = sc.routing == Routing::coherent_control ? "coherent" : "beam_splitter";
  r["phases"] = Json{{"name", config.switch_block.pi_h_phases ? "pi_h" : "aligned"},
                     {"arm_h", number(sc.phases.arm_h)},
                     {"arm_v", number(sc.phases.arm_v)}};
  r["observable_i"] = bloch_json(config.switch_block.observable_i);
  r["observable_j"] = bloch_json(config.switch_block.observable_j);
  r["m_i"] = sign_int(mi);
  r["m_j"] = sign_int(mj);

  Json amps = Json::array();
  for (int path : {3, 4})
    for (Outcome pol : kOutcomes)
      amps.push_back(Json{{"path", path},
                          {"pol", sign_char(pol)},
                          {"amplitude", complex_json(run.amplitude(path, pol))},
                          {"probability", number(run.probability(path, pol))}});
  r["branch"] = Json{{"weight", number(run.branch_weight())}, {"amplitudes", amps}};
  const double residual = std::abs(Complex(readout.value, readout.imaginary) - q);
  r["readout"] = Json{{"scale", number(readout.scale)},
                      {"amplitude", complex_json(readout.amplitude)},
                      {"value", number(readout.value)},
                      {"imaginary", number(readout.imaginary)}};
  r["formula_q"] = number(q);
  r["residual"] = number(residual);
  r["residual_real_part"] = number(std::abs(readout.value - q));
  r["commutator_cross_term"] = complex_json(cross);
  r["closed_form_check"] = Json{{"max_residual", number(cf.max_residual)},
                                {"max_residual_up_to_global_phase", number(cf.max_residual_up_to_global_phase)},
                                {"path3_residual_up_to_global_phase", number(cf.path3_residual_up_to_global_phase)}};

  Json events = Json::array();
  for (Outcome a : kOutcomes)
    for (Outcome b : kOutcomes)
      for (int path : {3, 4})
        for (Outcome pol : kOutcomes) {
          const double p = stats.at(a, b, path, pol);
          events.push_back(Json{{"m_i", sign_int(a)}, {"m_j", sign_int(b)}, {"path", path},
                                {"pol", sign_char(pol)}, {"probability", number(p)}});
          out.table.add_row({sign_char(a), sign_char(b), std::to_string(path), sign_char(pol), format_number(p)});
        }
  r["detectors"] = Json{{"total", number(stats.total)},
                        {"completeness_residual", number(std::abs(stats.total - 1.0))},
                        {"events", events}};
  r["note"] =
      "detectors record |amplitude|^2; reading the sign of q needs an interferometric phase "
      "reference that is not modelled here";
  return out;
}

RunOutput cmd_sweep(const RunConfig& config) {
  const SearchSpace space = config.search_space();
  const Objective objective = objective_by_name(config.sweep.objective);
  const SearchResult grid = grid_sweep(space, objective, config.sweep.resolution);
  RefineOptions opt;
  opt.step = config.sweep.step.value_or(1.0 / static_cast<double>(config.sweep.resolution));
  opt.tol = config.sweep.tol;
  opt.budget = config.sweep.budget;
  const SearchResult fine = refine(space, objective, grid.best_params, opt);

  RunOutput out;
  std::vector<std::string> header{"stage", "evaluation"};
  for (std::size_t k = 0; k < kParamCount; ++k) header.emplace_back(param_name(static_cast<Param>(k)));
  header.emplace_back("value");
  out.table = CsvTable(header);
  auto rows = [&](const char* stage, const SearchResult& r) {
    for (const auto& t : r.trace) {
      std::vector<std::string> row{stage, std::to_string(t.evaluation)};
      for (double v : t.params) row.push_back(format_number(v));
      row.push_back(format_number(t.value));
      out.table.add_row(std::move(row));
    }
  };
  rows("grid", grid);
  rows("refine", fine);

  Json free = Json::array();
  for (Param p : space.free_params()) {
    const ParamRange& range = space.range(p);
    free.push_back(Json{{"name", std::string(param_name(p))},
                        {"lo", number(range.lo)},
                        {"hi", number(range.hi)},
                        {"periodic", range.periodic}});
  }
  Json& r = out.result;
  r["command"] = "sweep";
  r["objective"] = objective.name;
  r["resolution"] = config.sweep.resolution;
  r["space"] = Json{{"free", free}, {"equal_spacing", space.equal_spacing()}, {"origin", params_json(space.origin())}};
  r["grid"] = search_result_json(grid);
  r["refine"] = search_result_json(fine);
  r["best_value"] = number(fine.best_value);
  r["best_params"] = params_json(fine.best_params);
  r["converged"] = fine.converged;
  r["revalidated"] = revalidate(objective, grid) && revalidate(objective, fine);
  return out;
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Format format = Format::both;
  try {
    format = parse_format(options.format);
    if (options.config) config = load_config(*options.config);
    if (options.tolerance && !(*options.tolerance >= 0.0))
      throw DomainError("--tolerance must be non-negative");
  } catch (const Error& e) {
    err << "lgswitch: " << e.what() << "\n";
    return kExitConfigError;
  }
  const std::uint64_t seed = options.seed.value_or(config.seed.value_or(kDefaultSeed));
  const std::filesystem::path dir =
      options.out.value_or(config.output_dir ? std::filesystem::path(*config.output_dir)
                                             : std::filesystem::path("lgswitch-runs") / options.command);

  RunOutput output;
  int code = kExitOk;
  try {
    if (options.command == "quasiprob") {
      output = cmd_quasiprob(config);
    } else if (options.command == "lgi") {
      output = cmd_lgi(config);
    } else if (options.command == "switch") {
      output = cmd_switch(config);
    } else if (options.command == "sweep") {
      output = cmd_sweep(config);
      out << "best " << format_number(output.result["best_value"].get<double>())
          << (output.result["converged"].get<bool>() ? "" : " (unconverged)") << "\n";
    } else if (options.command == "verify") {
      VerifySettings vs;
      vs.seed = seed;
      vs.scenarios = config.verify.scenarios;
      vs.survey_samples = config.verify.survey_samples;
      vs.tolerance = options.tolerance ? options.tolerance : config.verify.tolerance;
      const VerifyReport report = run_verify(vs);
      out << report.text();
      output.result = report.json();
      output.table = report.table();
      if (!report.passed()) code = kExitInvariantFailure;
    } else {
      err << "lgswitch: unknown command '" << options.command << "'\n";
      return kExitConfigError;
    }
  } catch (const InvariantViolation& e) {
    err << "lgswitch: invariant violated: " << e.what() << "\n";
    return kExitInvariantFailure;
  } catch (const DomainError& e) {
    err << "lgswitch: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    const auto files = write_run(dir, {options.command, config.source_name, config.source_text, seed}, output, format);
    out << "wrote";
    for (const auto& f : files) out << " " << (dir / f).string();
    out << " " << (dir / "manifest.json").string() << "\n";
  } catch (const std::exception& e) {
    err << "lgswitch: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
  return code;
}

}  // namespace lgsw::cli
