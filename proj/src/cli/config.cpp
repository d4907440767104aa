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

#include "lgswitch/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "lgswitch/violation_search.hpp"

namespace lgsw::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Value {
  enum class Kind { number, string, boolean, array } kind = Kind::number;
  double number = 0.0;
  std::string text;
  bool flag = false;
  std::vector<Value> items;
  std::size_t line = 0;
};

using Section = std::map<std::string, Value, std::less<>>;

const std::map<std::string, std::vector<std::string>, std::less<>>& schema() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> s{
      {"state", {"theta", "phi", "purity"}},
      {"hamiltonian", {"axis", "omega"}},
      {"times", {"t1", "t2", "t3"}},
      {"measurement", {"lambda"}},
      {"sweep", {"objective", "resolution", "tol", "budget", "step", "free", "equal_spacing"}},
      {"switch", {"observable_i", "observable_j", "m_i", "m_j", "routing", "phases"}},
      {"verify", {"scenarios", "survey_samples", "tolerance", "seed"}},
      {"output", {"dir"}},
  };
  return s;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Parser {
 public:
  Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
    throw ConfigError(source_, line, msg);
  }

  // Product/quotient of numbers and pi with an optional leading sign.
  double number(std::string_view s, std::size_t line) const {
    s = trim(s);
    if (s.empty()) fail(line, "expected a number");
    double sign = 1.0;
    if (s.front() == '-' || s.front() == '+') {
      if (s.front() == '-') sign = -1.0;
      s = trim(s.substr(1));
    }
    double acc = 0.0;
    char op = '*';
    bool first = true;
    while (true) {
      const auto pos = s.find_first_of("*/");
      const std::string_view tok = trim(s.substr(0, pos));
      double v = 0.0;
      if (tok == "pi") {
        v = std::numbers::pi;
      } else {
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
          fail(line, "cannot parse number '" + std::string(tok) + "'");
      }
      if (first) {
        acc = v;
        first = false;
      } else if (op == '*') {
        acc *= v;
      } else {
        acc /= v;
      }
      if (pos == std::string_view::npos) break;
      op = s[pos];
      s = s.substr(pos + 1);
    }
    if (!std::isfinite(acc)) fail(line, "number is not finite");
    return sign * acc;
  }

  Value scalar(std::string_view s, std::size_t line) const {
    s = trim(s);
    Value v;
    v.line = line;
    if (!s.empty() && s.front() == '"') {
      if (s.size() < 2 || s.back() != '"' || s.substr(1, s.size() - 2).find('"') != std::string_view::npos)
        fail(line, "unterminated string");
      v.kind = Value::Kind::string;
      v.text = std::string(s.substr(1, s.size() - 2));
    } else if (s == "true" || s == "false") {
      v.kind = Value::Kind::boolean;
      v.flag = s == "true";
    } else {
      v.number = number(s, line);
    }
    return v;
  }

  Value value(std::string_view s, std::size_t line) const {
    s = trim(s);
    if (s.empty()) fail(line, "missing value");
    if (s.front() != '[') return scalar(s, line);
    if (s.back() != ']') fail(line, "unterminated array");
    Value v;
    v.kind = Value::Kind::array;
    v.line = line;
    std::string_view body = trim(s.substr(1, s.size() - 2));
    while (!body.empty()) {
      const auto comma = body.find(',');
      v.items.push_back(scalar(body.substr(0, comma), line));
      if (v.items.back().kind == Value::Kind::array) fail(line, "nested arrays are not supported");
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
      if (body.empty()) fail(line, "trailing comma in array");
    }
    return v;
  }

  std::map<std::string, Section, std::less<>> parse(std::string_view text) const {
    std::map<std::string, Section, std::less<>> out;
    std::string current;
    std::size_t line = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      std::string_view s = raw;
      bool in_string = false;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '"') in_string = !in_string;
        if (s[k] == '#' && !in_string) {
          s = s.substr(0, k);
          break;
        }
      }
      s = trim(s);
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') fail(line, "malformed section header");
        current = std::string(trim(s.substr(1, s.size() - 2)));
        if (!schema().contains(current)) fail(line, "unknown section [" + current + "]");
        if (out.contains(current)) fail(line, "duplicate section [" + current + "]");
        out[current];
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string_view::npos) fail(line, "expected 'key = value'");
      const std::string key(trim(s.substr(0, eq)));
      if (current.empty()) fail(line, "key '" + key + "' appears before any section");
      const auto& keys = schema().at(current);
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        fail(line, "unknown key '" + key + "' in [" + current + "]");
      Section& sec = out[current];
      if (sec.contains(key)) fail(line, "duplicate key '" + key + "'");
      sec.emplace(key, value(s.substr(eq + 1), line));
    }
    return out;
  }

 private:
  std::string source_;
};

class Reader {
 public:
  Reader(const Parser& p, const std::map<std::string, Section, std::less<>>& doc)
      : p_(p), doc_(doc) {}

  const Value* find(std::string_view section, std::string_view key) const {
    const auto s = doc_.find(section);
    if (s == doc_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  std::size_t line_of(std::string_view section, std::string_view key) const {
    const Value* v = find(section, key);
    return v ? v->line : 0;
  }

  void number(std::string_view section, std::string_view key, double& out, double lo, double hi) const {
    const Value* v = find(section, key);
    if (!v) return;
    if (v->kind != Value::Kind::number) p_.fail(v->line, std::string(key) + " must be a number");
    if (v->number < lo || v->number > hi) {
      std::ostringstream msg;
      msg << key << " = " << v->number << " is outside [" << lo << ", " << hi << "]";
      p_.fail(v->line, msg.str());
    }
    out = v->number;
  }

  void finite(std::string_view section, std::string_view key, double& out) const {
    number(section, key, out, -std::numeric_limits<double>::max(), std::numeric_limits<double>::max());
  }

  template <class Int>
  void integer(std::string_view section, std::string_view key, Int& out, double lo, double hi) const {
    double d = 0.0;
    const Value* v = find(section, key);
    if (!v) return;
    number(section, key, d, lo, hi);
    if (d != std::floor(d)) p_.fail(v->line, std::string(key) + " must be an integer");
    out = static_cast<Int>(d);
  }

  void text(std::string_view section, std::string_view key, std::string& out) const {
    const Value* v = find(section, key);
    if (!v) return;
    if (v->kind != Value::Kind::string) p_.fail(v->line, std::string(key) + " must be a string");
    out = v->text;
  }

  void boolean(std::string_view section, std::string_view key, bool& out) const {
    const Value* v = find(section, key);
    if (!v) return;
    if (v->kind != Value::Kind::boolean) p_.fail(v->line, std::string(key) + " must be true or false");
    out = v->flag;
  }

  void vector3(std::string_view section, std::string_view key, BlochVector& out) const {
    const Value* v = find(section, key);
    if (!v) return;
    if (v->kind != Value::Kind::array || v->items.size() != 3)
      p_.fail(v->line, std::string(key) + " must be an array of three numbers");
    BlochVector r{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (v->items[k].kind != Value::Kind::number)
        p_.fail(v->line, std::string(key) + " must be an array of three numbers");
      r[k] = v->items[k].number;
    }
    if (!(length(r) > 0.0)) p_.fail(v->line, std::string(key) + " must be a nonzero vector");
    out = r;
  }

  void outcome(std::string_view section, std::string_view key, Outcome& out) const {
    const Value* v = find(section, key);
    if (!v) return;
    if (v->kind != Value::Kind::number || (v->number != 1.0 && v->number != -1.0))
      p_.fail(v->line, std::string(key) + " must be 1 or -1");
    out = v->number > 0 ? Outcome::plus : Outcome::minus;
  }

  const Parser& parser() const { return p_; }

 private:
  const Parser& p_;
  const std::map<std::string, Section, std::less<>>& doc_;
};

double wrap_angle(double x) {
  double v = std::fmod(x, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  if (v >= kTwoPi) v = 0.0;
  return v;
}

BlochVector unit(const BlochVector& v) {
  const double n = length(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& message)
    : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

RunConfig parse_config(std::string_view text, const std::string& source_name) {
  const Parser parser(source_name);
  const auto doc = parser.parse(text);
  const Reader r(parser, doc);
  const double big = std::numeric_limits<double>::max();

  RunConfig c;
  c.source_name = source_name;
  c.source_text = std::string(text);

  r.number("state", "theta", c.state.theta, 0.0, std::numbers::pi);
  r.finite("state", "phi", c.state.phi);
  r.number("state", "purity", c.state.purity, 0.0, 1.0);
  r.vector3("hamiltonian", "axis", c.hamiltonian.axis);
  r.finite("hamiltonian", "omega", c.hamiltonian.omega);
  r.finite("times", "t1", c.times.t1);
  r.finite("times", "t2", c.times.t2);
  r.finite("times", "t3", c.times.t3);
  if (c.times.t2 < c.times.t1)
    parser.fail(r.line_of("times", "t2") ? r.line_of("times", "t2") : r.line_of("times", "t1"),
                "times must satisfy t1 <= t2 <= t3");
  if (c.times.t3 < c.times.t2)
    parser.fail(r.line_of("times", "t3") ? r.line_of("times", "t3") : r.line_of("times", "t2"),
                "times must satisfy t1 <= t2 <= t3");
  r.number("measurement", "lambda", c.lambda, 0.0, 1.0);
  if (!(c.lambda > 0.0)) parser.fail(r.line_of("measurement", "lambda"), "lambda must be in (0, 1]");

  r.text("sweep", "objective", c.sweep.objective);
  try {
    objective_by_name(c.sweep.objective);
  } catch (const DomainError& e) {
    parser.fail(r.line_of("sweep", "objective"), e.what());
  }
  r.integer("sweep", "resolution", c.sweep.resolution, 2.0, 1e8);
  r.number("sweep", "tol", c.sweep.tol, 0.0, big);
  if (!(c.sweep.tol > 0.0)) parser.fail(r.line_of("sweep", "tol"), "tol must be positive");
  r.integer("sweep", "budget", c.sweep.budget, 1.0, 1e12);
  if (r.find("sweep", "step")) {
    double step = 0.0;
    r.number("sweep", "step", step, 0.0, 1.0);
    if (!(step > 0.0)) parser.fail(r.line_of("sweep", "step"), "step must be in (0, 1]");
    c.sweep.step = step;
  }
  r.boolean("sweep", "equal_spacing", c.sweep.equal_spacing);
  if (const Value* v = r.find("sweep", "free")) {
    if (v->kind != Value::Kind::array) parser.fail(v->line, "free must be an array of parameter names");
    c.sweep.free.clear();
    for (const Value& item : v->items) {
      const auto p = item.kind == Value::Kind::string ? param_from_name(item.text) : std::nullopt;
      if (!p) parser.fail(v->line, "unknown parameter '" + item.text + "' in free");
      if (std::find(c.sweep.free.begin(), c.sweep.free.end(), *p) != c.sweep.free.end())
        parser.fail(v->line, "parameter '" + item.text + "' listed twice");
      c.sweep.free.push_back(*p);
    }
    if (c.sweep.free.empty()) parser.fail(v->line, "free must name at least one parameter");
  }
  if (c.sweep.equal_spacing &&
      std::find(c.sweep.free.begin(), c.sweep.free.end(), Param::angle23) != c.sweep.free.end())
    parser.fail(r.line_of("sweep", "free"), "angle23 follows angle12 when equal_spacing = true");

  r.vector3("switch", "observable_i", c.switch_block.observable_i);
  r.vector3("switch", "observable_j", c.switch_block.observable_j);
  r.outcome("switch", "m_i", c.switch_block.m_i);
  r.outcome("switch", "m_j", c.switch_block.m_j);
  if (r.find("switch", "routing")) {
    std::string routing;
    r.text("switch", "routing", routing);
    if (routing == "beam_splitter") {
      c.switch_block.routing = Routing::polarizing_beam_splitter;
    } else if (routing == "coherent") {
      c.switch_block.routing = Routing::coherent_control;
    } else {
      parser.fail(r.line_of("switch", "routing"), "routing must be \"beam_splitter\" or \"coherent\"");
    }
  }
  if (r.find("switch", "phases")) {
    std::string phases;
    r.text("switch", "phases", phases);
    if (phases != "aligned" && phases != "pi_h")
      parser.fail(r.line_of("switch", "phases"), "phases must be \"aligned\" or \"pi_h\"");
    c.switch_block.pi_h_phases = phases == "pi_h";
  }

  r.integer("verify", "scenarios", c.verify.scenarios, 1.0, 1e9);
  r.integer("verify", "survey_samples", c.verify.survey_samples, 1.0, 1e9);
  if (r.find("verify", "tolerance")) {
    double tol = 0.0;
    r.number("verify", "tolerance", tol, 0.0, big);
    c.verify.tolerance = tol;
  }
  if (r.find("verify", "seed")) {
    std::uint64_t seed = 0;
    r.integer("verify", "seed", seed, 0.0, 9007199254740992.0);
    c.seed = seed;
  }
  if (r.find("output", "dir")) {
    std::string dir;
    r.text("output", "dir", dir);
    if (dir.empty()) parser.fail(r.line_of("output", "dir"), "dir must not be empty");
    c.output_dir = dir;
  }

  try {
    c.scenario();
    c.search_space().validate();
    c.switch_config().validate();
  } catch (const DomainError& e) {
    parser.fail(0, e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

LGScenario RunConfig::scenario() const {
  const double st = state.theta, sp = state.phi, r = state.purity;
  const BlochVector bloch{r * std::sin(st) * std::cos(sp), r * std::sin(st) * std::sin(sp),
                          r * std::cos(st)};
  return LGScenario::precession(QuantumState::from_bloch(bloch), hamiltonian.axis, hamiltonian.omega,
                                {times.t1, times.t2, times.t3}, DichotomicObservable({0, 0, 1}),
                                lambda);
}

SearchSpace RunConfig::search_space() const {
  const BlochVector a = unit(hamiltonian.axis);
  SearchSpace space;
  space.fix(Param::state_theta, state.theta)
      .fix(Param::state_phi, wrap_angle(state.phi))
      .fix(Param::purity, state.purity)
      .fix(Param::axis_theta, std::acos(std::clamp(a[2], -1.0, 1.0)))
      .fix(Param::axis_phi, wrap_angle(std::atan2(a[1], a[0])))
      .fix(Param::angle12, wrap_angle(hamiltonian.omega * (times.t2 - times.t1)))
      .fix(Param::angle23, wrap_angle(hamiltonian.omega * (times.t3 - times.t2)))
      .fix(Param::lambda, lambda)
      .equal_spacing(sweep.equal_spacing);
  for (Param p : sweep.free) space.release(p);
  return space;
}

SwitchConfig RunConfig::switch_config() const {
  SwitchConfig c = SwitchConfig::projective(DichotomicObservable(unit(switch_block.observable_i)),
                                            DichotomicObservable(unit(switch_block.observable_j)));
  c.routing = switch_block.routing;
  c.phases = switch_block.pi_h_phases ? SwitchPhases::pi_on_h()
                                         : SwitchPhases::anticommutator_aligned();
  return c;
}

}  // namespace lgsw::cli
