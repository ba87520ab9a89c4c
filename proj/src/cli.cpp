#include "ostro/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "ostro/exact.hpp"
#include "ostro/numerics.hpp"
#include "ostro/ode.hpp"
#include "ostro/parallel.hpp"
#include "ostro/pde.hpp"
#include "ostro/polyexact.hpp"
#include "ostro/verify.hpp"

namespace ostro::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Strict config access: every key must be consumed, or the section is rejected.

class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return j_->contains(key); }

  const json& at(const std::string& key) {
    if (!has(key)) throw ConfigError(path_ + ": missing key '" + key + "'");
    used_.insert(key);
    return (*j_)[key];
  }

  const json* find(const std::string& key) {
    if (!has(key)) return nullptr;
    used_.insert(key);
    return &(*j_)[key];
  }

  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  /// Rejects keys that were never read.
  void done() const {
    for (const auto& [k, v] : j_->items()) {
      if (!used_.count(k)) throw ConfigError(path_ + ": unknown key '" + k + "'");
    }
  }

  /// Rejects keys outside `allowed` up front, so dispatch code can read selectively.
  void only(const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : j_->items()) {
      if (!allowed.count(k)) throw ConfigError(child(k) + ": unknown key");
    }
  }

 private:
  const json* j_;
  std::string path_;
  std::set<std::string> used_;
};

// Numbers, "p/q" strings, or multiples of pi such as "2pi", "-pi/2".
double to_number(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw ConfigError(path + ": expected a number or a \"p/q\" string");
  const std::string s = v.get<std::string>();
  static const std::regex pi_form(R"(^\s*([+-]?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    const std::string k = m[1].str();
    double f = (k.empty() || k == "+") ? 1.0 : (k == "-" ? -1.0 : std::stod(k));
    if (m[2].matched) f /= std::stod(m[2].str());
    return f * std::numbers::pi;
  }
  try {
    return Rational::parse(s).to_double();
  } catch (const Error&) {
    throw ConfigError(path + ": cannot parse '" + s + "' as a number");
  }
}

// Exact inputs. Non-integer JSON numbers are refused as NotRational (exit 1).
Rational to_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) {
    throw Error(ErrorKind::NotRational, path + ": floating-point input, give \"p/q\" instead");
  }
  if (!v.is_string()) throw ConfigError(path + ": expected a \"p/q\" string");
  return Rational::parse(v.get<std::string>());
}

double number_or(Node& n, const std::string& key, double fallback) {
  const json* v = n.find(key);
  return v ? to_number(*v, n.child(key)) : fallback;
}

int int_or(Node& n, const std::string& key, int fallback) {
  const json* v = n.find(key);
  if (!v) return fallback;
  if (!v->is_number_integer()) throw ConfigError(n.child(key) + ": expected an integer");
  return v->get<int>();
}

bool bool_or(Node& n, const std::string& key, bool fallback) {
  const json* v = n.find(key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ConfigError(n.child(key) + ": expected a boolean");
  return v->get<bool>();
}

std::string string_or(Node& n, const std::string& key, const std::string& fallback) {
  const json* v = n.find(key);
  if (!v) return fallback;
  if (!v->is_string()) throw ConfigError(n.child(key) + ": expected a string");
  return v->get<std::string>();
}

std::vector<double> numbers_or(Node& n, const std::string& key, std::vector<double> fallback) {
  const json* v = n.find(key);
  if (!v) return fallback;
  if (!v->is_array() || v->empty()) throw ConfigError(n.child(key) + ": expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v->size(); ++i) {
    out.push_back(to_number((*v)[i], n.child(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> ints_or(Node& n, const std::string& key, std::vector<int> fallback) {
  const json* v = n.find(key);
  if (!v) return fallback;
  if (!v->is_array() || v->empty()) throw ConfigError(n.child(key) + ": expected a non-empty array");
  std::vector<int> out;
  for (const auto& e : *v) {
    if (!e.is_number_integer()) throw ConfigError(n.child(key) + ": expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// {"kind": zero|constant|linear|sinusoid|general, c0, c1, amplitude, omega, phase}
// or a bare number for a constant.
TimeProfile time_profile(const json& v, const std::string& path) {
  if (v.is_number() || v.is_string()) return TimeProfile::constant(to_number(v, path));
  Node n(v, path);
  const std::string kind = string_or(n, "kind", "constant");
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"zero", {"kind"}},
      {"constant", {"kind", "c0"}},
      {"linear", {"kind", "c0", "c1"}},
      {"sinusoid", {"kind", "c0", "amplitude", "omega", "phase"}},
      {"general", {"kind", "c0", "c1", "amplitude", "omega", "phase"}},
  };
  const auto it = allowed.find(kind);
  if (it == allowed.end()) throw ConfigError(path + ".kind: unknown time profile '" + kind + "'");
  n.only(it->second);
  const double c0 = number_or(n, "c0", 0.0);
  const double c1 = number_or(n, "c1", 0.0);
  const double amp = number_or(n, "amplitude", 0.0);
  const double omega = number_or(n, "omega", 1.0);
  const double phase = number_or(n, "phase", 0.0);
  n.done();
  return TimeProfile::general(c0, c1, amp, omega, phase);
}

TimeProfile time_profile_or(Node& n, const std::string& key, const TimeProfile& fallback) {
  const json* v = n.find(key);
  return v ? time_profile(*v, n.child(key)) : fallback;
}

json time_profile_json(const TimeProfile& p) {
  return json{{"c0", p.c0()}, {"c1", p.c1()}, {"amplitude", p.amplitude()}, {"omega", p.omega()},
              {"phase", p.phase()}};
}

// ---------------------------------------------------------------------------
// Family description shared by emit, verify, conserve, simulate and reduce.

struct FamilySpec {
  Family family = Family::solitary;
  PhysParams params{1.0, 1.0};
  std::map<std::string, double> values;
  std::string branch = "plus";
  SpeedProfile speed;
  TimeProfile h0;
  TimeProfile topo_h2, topo_h1, topo_h0;
  std::optional<std::pair<std::string, double>> perturb;
};

const std::map<std::string, double>& family_defaults(Family f) {
  static const std::map<Family, std::map<std::string, double>> d = {
      {Family::fam1, {{"a3", 8.0 / 9.0}, {"a2", 0.0}, {"a1", 0.0}, {"a0", 0.0}}},
      {Family::fam2, {{"a2", 12.0}, {"a0", 0.0}, {"c0", 0.0}}},
      {Family::fam3, {{"c2", 1.0}, {"a1", 0.0}, {"a0", 0.0}}},
      {Family::rational, {{"c0", 1.0}}},
      {Family::solitary, {{"k", 1.0}}},
      {Family::oscillatory, {{"c0", 0.0}, {"c1", 1.0}, {"phi", 0.0}}},
      {Family::frameshift, {}},
      {Family::cubictw, {{"mu", 1.0}, {"c2", 0.5}}},
  };
  return d.at(f);
}

PhysParams default_params(Family f) {
  switch (f) {
    case Family::fam1:
    case Family::fam2: return {1.0, 6.0};
    case Family::fam3:
    case Family::frameshift: return {1.0, 2.0};
    default: return {1.0, 1.0};
  }
}

bool is_cubic(Family f) { return f == Family::fam1 || f == Family::fam2 || f == Family::fam3; }
bool is_galilean(Family f) { return f != Family::frameshift && f != Family::cubictw; }

FamilySpec family_spec(Node& root) {
  FamilySpec s;
  const json& fam = root.at("family");
  if (!fam.is_string()) throw ConfigError("family: expected a string");
  try {
    s.family = family_from_string(fam.get<std::string>());
  } catch (const Error&) {
    throw ConfigError("family: unknown family '" + fam.get<std::string>() + "'");
  }
  const PhysParams dp = default_params(s.family);
  double alpha = dp.alpha, beta = dp.beta;
  if (const json* p = root.find("params")) {
    Node n(*p, "params");
    alpha = number_or(n, "alpha", alpha);
    beta = number_or(n, "beta", beta);
    n.done();
  }
  s.params = PhysParams(alpha, beta);

  s.values = family_defaults(s.family);
  if (const json* fp = root.find("family_params")) {
    Node n(*fp, "family_params");
    for (auto& [k, v] : s.values) v = number_or(n, k, v);
    if (s.family == Family::fam1) {
      s.branch = string_or(n, "branch", "plus");
      if (s.branch != "plus" && s.branch != "minus") {
        throw ConfigError("family_params.branch: expected \"plus\" or \"minus\"");
      }
    }
    n.done();
  }

  const bool galilean = is_galilean(s.family);
  if (galilean) {
    s.speed = time_profile_or(root, "speed", TimeProfile::zero());
    s.h0 = time_profile_or(root, "h0", TimeProfile::zero());
  } else if (root.has("speed") || root.has("h0")) {
    throw ConfigError(std::string("speed/h0: not used by ") + to_string(s.family) +
                      "; give them under \"topography\"");
  }

  if (const json* t = root.find("topography")) {
    if (galilean) throw ConfigError("topography: the Galilean families synthesize their own forcing");
    Node n(*t, "topography");
    if (s.family == Family::frameshift) s.topo_h2 = time_profile_or(n, "h2", TimeProfile::constant(1.0));
    s.topo_h1 = time_profile_or(n, "h1", TimeProfile::zero());
    s.topo_h0 = time_profile_or(n, "h0", TimeProfile::zero());
    n.done();
  } else if (s.family == Family::frameshift) {
    s.topo_h2 = TimeProfile::constant(1.0);
  }

  if (const json* p = root.find("perturb")) {
    if (!is_cubic(s.family)) throw ConfigError("perturb: only the cubic families take a perturbation");
    Node n(*p, "perturb");
    const std::string name = string_or(n, "coefficient", "c0");
    if (name != "c0" && name != "c1" && name != "c2" && name != "c3") {
      throw ConfigError("perturb.coefficient: expected one of c0, c1, c2, c3");
    }
    s.perturb = {name, number_or(n, "delta", 0.0)};
    n.done();
  }
  return s;
}

CubicCoeffs<double> cubic_coeffs(const FamilySpec& s) {
  const auto& v = s.values;
  const double beta = s.params.beta;
  switch (s.family) {
    case Family::fam1:
      return cubic_family_1(v.at("a3"), v.at("a2"), v.at("a1"), v.at("a0"), beta,
                            s.branch == "plus" ? Branch::plus : Branch::minus);
    case Family::fam2: return cubic_family_2(v.at("a2"), v.at("a0"), v.at("c0"), beta);
    default: return cubic_family_3(v.at("c2"), v.at("a1"), v.at("a0"), beta);
  }
}

ExactSolution build_solution(const FamilySpec& s) {
  const auto& v = s.values;
  switch (s.family) {
    case Family::fam1:
    case Family::fam2:
    case Family::fam3: {
      CubicCoeffs<double> k = cubic_coeffs(s);
      if (!s.perturb) return cubic_solution(k, s.params, s.speed, s.h0);
      const std::map<std::string, int> index = {{"c0", 0}, {"c1", 1}, {"c2", 2}, {"c3", 3}};
      std::vector<double> c = {k.c0, k.c1, k.c2, k.c3};
      c[static_cast<std::size_t>(index.at(s.perturb->first))] += s.perturb->second;
      auto sol = galilean_solution(s.family, Profile::polynomial(Polynomial<double>(c)),
                                   Profile::polynomial(k.forcing()), s.params, s.speed, s.h0);
      sol.coefficients = {{"c3", c[3]}, {"c2", c[2]}, {"c1", c[1]}, {"c0", c[0]}};
      return sol;
    }
    case Family::rational: return rational_wave(v.at("c0"), s.params, s.speed, s.h0);
    case Family::solitary: return solitary_wave(v.at("k"), s.params, s.speed, s.h0);
    case Family::oscillatory:
      return oscillatory_wave(v.at("c0"), v.at("c1"), v.at("phi"), s.params, s.speed, s.h0);
    case Family::frameshift:
      return frame_shift_solution(Topography::quadratic(s.topo_h2, s.topo_h1, s.topo_h0, true), s.params);
    case Family::cubictw:
      return cubic_tw_solution(v.at("mu"), v.at("c2"), s.topo_h1, s.topo_h0, s.params);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

json family_json(const FamilySpec& s, const ExactSolution& sol) {
  json coeffs = json::object();
  for (const auto& [k, v] : sol.coefficients) coeffs[k] = v;
  json j{{"name", to_string(s.family)},
         {"params", {{"alpha", s.params.alpha}, {"beta", s.params.beta}}},
         {"coefficients", coeffs}};
  if (is_galilean(s.family)) {
    j["speed"] = time_profile_json(s.speed);
    j["h0"] = time_profile_json(s.h0);
  }
  return j;
}

struct GridSpec {
  double a, b;
  int n;
  bool periodic;
  Grid1D grid() const { return Grid1D(a, b, n, periodic); }
};

GridSpec grid_spec(Node& root, GridSpec fallback) {
  const json* g = root.find("grid");
  if (!g) return fallback;
  Node n(*g, "grid");
  GridSpec s{number_or(n, "a", fallback.a), number_or(n, "b", fallback.b), int_or(n, "n", fallback.n),
             bool_or(n, "periodic", fallback.periodic)};
  n.done();
  return s;
}

json grid_json(const Grid1D& g) {
  return json{{"a", g.a()}, {"b", g.b()}, {"n", g.n()}, {"periodic", g.periodic()}};
}

json report_json(const ResidualReport& r) {
  return json{{"max_abs", r.max_abs}, {"rel_max", r.rel_max}, {"mode", to_string(r.mode)}};
}

// ---------------------------------------------------------------------------
// Output plumbing.

class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : os_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file '" + *path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void csv_line(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_double(v);
    first = false;
  }
  os << '\n';
}

const std::set<std::string> kCommonKeys = {"family", "params", "family_params", "speed", "h0",
                                           "topography", "perturb", "grid", "times", "tolerances"};

void allow_section(Node& root, const std::set<std::string>& extra) {
  std::set<std::string> all = kCommonKeys;
  all.insert(extra.begin(), extra.end());
  root.only(all);
}

// ---------------------------------------------------------------------------
// Commands.

int cmd_catalog(const Options& opt, std::ostream& out) {
  Sink sink(opt.out, out);
  if (opt.json) {
    json list = json::array();
    for (const auto& e : catalog()) {
      list.push_back({{"name", e.name}, {"signature", e.signature}, {"description", e.description}});
    }
    write_json(sink.stream(), json{{"families", list}});
    return kExitPass;
  }
  for (const auto& e : catalog()) {
    sink.stream() << e.name << "\n  parameters: " << e.signature << "\n  " << e.description << '\n';
  }
  return kExitPass;
}

int cmd_emit(const json& config, const Options& opt, std::ostream& out) {
  Node root(config, "");
  allow_section(root, {});
  const FamilySpec spec = family_spec(root);
  const Grid1D grid = grid_spec(root, {-10.0, 10.0, 401, false}).grid();
  const std::vector<double> times = numbers_or(root, "times", {0.0});
  root.find("tolerances");
  root.done();

  const ExactSolution sol = build_solution(spec);
  Sink sink(opt.out, out);
  auto& os = sink.stream();
  os << "x,t,u,v,h\n";
  for (double t : times) {
    for (int i = 0; i < grid.n(); ++i) {
      const double x = grid.x(i);
      csv_line(os, {x, t, sol.u(x, t), sol.v(x, t), sol.topo(x, t)});
    }
  }
  return kExitPass;
}

int cmd_verify(const json& config, const Options& opt, std::ostream& out, std::ostream& err) {
  Node root(config, "");
  allow_section(root, {});
  const FamilySpec spec = family_spec(root);
  const Grid1D grid = grid_spec(root, {-10.0, 10.0, 401, false}).grid();
  const std::vector<double> times = numbers_or(root, "times", {0.0, 0.5, 1.0});
  double tol_res = 1e-9, tol_mass = 1e-6;
  if (const json* t = root.find("tolerances")) {
    Node n(*t, "tolerances");
    tol_res = number_or(n, "residual", tol_res);
    tol_mass = number_or(n, "mass", tol_mass);
    n.done();
  }
  root.done();

  const ExactSolution sol = build_solution(spec);
  struct PerTime {
    ResidualReport ru, rv;
    double mass, mass_rel;
  };
  const auto per = parallel_map<PerTime>(times.size(), [&](std::size_t i) {
    const double t = times[i];
    PerTime p{residual_u(sol, grid, t), residual_v(sol, grid, t), 0.0, 0.0};
    p.mass = mass_balance(sol.u, forcing_of(sol.topo), sol.params, grid.a(), grid.b(), t, 2001);
    double umax = 0.0;
    for (int k = 0; k < grid.n(); ++k) umax = std::max(umax, std::abs(sol.u(grid.x(k), t)));
    p.mass_rel = std::abs(p.mass) / (1.0 + umax * umax);
    return p;
  });

  ResidualReport ru = per[0].ru, rv = per[0].rv;
  double mass = 0.0, mass_rel = 0.0;
  for (const auto& p : per) {
    if (p.ru.rel_max > ru.rel_max) ru = p.ru;
    if (p.rv.rel_max > rv.rel_max) rv = p.rv;
    if (p.mass_rel >= mass_rel) {
      mass_rel = p.mass_rel;
      mass = p.mass;
    }
  }
  std::optional<ResidualReport> red;
  if (sol.profile && sol.forcing) {
    red = residual_reduction(*sol.profile, *sol.forcing, sol.params, ReductionVariant::x1(), grid);
  } else if (spec.family == Family::cubictw && sol.profile) {
    red = residual_reduction(*sol.profile, Profile::zero(), sol.params,
                             ReductionVariant::case2(spec.values.at("mu")), grid);
  }

  std::vector<std::pair<std::string, bool>> checks = {
      {"residual_u", ru.rel_max <= tol_res},
      {"residual_v", rv.rel_max <= tol_res},
      {"reduction_residual", !red || red->rel_max <= tol_res},
      {"mass_balance", mass_rel <= tol_mass},
  };
  bool pass = true;
  std::string first_failure;
  for (const auto& [name, ok] : checks) {
    if (!ok && first_failure.empty()) first_failure = name;
    pass &= ok;
  }
  const json fj = family_json(spec, sol);
  json report{{"family", fj["name"]},
              {"params", fj["params"]},
              {"coefficients", fj["coefficients"]},
              {"grid", grid_json(grid)},
              {"times", times},
              {"residual_u", report_json(ru)},
              {"residual_v", report_json(rv)},
              {"reduction_residual", red ? report_json(*red) : json(nullptr)},
              {"mass_balance", {{"value", mass}, {"relative", mass_rel}}},
              {"tolerances", {{"residual", tol_res}, {"mass", tol_mass}}},
              {"pass", pass}};
  Sink sink(opt.out, out);
  write_json(sink.stream(), report);
  if (!pass) {
    err << "verify: check failed: " << first_failure << '\n';
    return kExitFailure;
  }
  return kExitPass;
}

// Order fit, or exactness when every error sits below the floor.
json order_table(const std::vector<std::pair<double, double>>& series, double floor) {
  json steps = json::array(), errors = json::array();
  bool exact = true;
  for (const auto& [h, e] : series) {
    steps.push_back(h);
    errors.push_back(e);
    exact &= e <= floor;
  }
  json j{{"steps", steps}, {"errors", errors}, {"exact", exact}};
  j["order"] = exact ? json(nullptr) : json(convergence_order(series));
  return j;
}

int cmd_conserve(const json& config, const Options& opt, std::ostream& out, std::ostream& err) {
  Node root(config, "");
  allow_section(root, {"conserve"});
  const FamilySpec spec = family_spec(root);
  const GridSpec gs = grid_spec(root, {0.0, 2 * std::numbers::pi, 257, false});
  std::string which = "auto";
  std::vector<double> times = {0.5, 1.0};
  double dt = 1e-3, series_dt = 1e-4, tol = 1e-5;
  std::vector<double> dt_series = {0.04, 0.02, 0.01, 0.005};
  std::vector<int> cells = {32, 64, 128, 256};
  if (const json* c = root.find("conserve")) {
    Node n(*c, "conserve");
    which = string_or(n, "current", which);
    times = numbers_or(n, "times", times);
    dt = number_or(n, "dt", dt);
    dt_series = numbers_or(n, "dt_series", dt_series);
    cells = ints_or(n, "cells_series", cells);
    series_dt = number_or(n, "series_dt", series_dt);
    tol = number_or(n, "tolerance", tol);
    n.done();
  }
  if (which != "auto" && which != "energy" && which != "momentum") {
    throw ConfigError("conserve.current: expected auto, energy or momentum");
  }
  root.find("times");
  root.find("tolerances");
  root.done();

  const ExactSolution sol = build_solution(spec);
  if (which == "auto") {
    which = sol.topo.kind() == Topography::Kind::galilean ? "energy" : "momentum";
  }
  const ConservedCurrent cur = which == "energy" ? energy_current(sol.topo, sol.params)
                                                 : momentum_current(sol.topo, sol.params);
  const Grid1D grid = gs.grid();
  const auto base = continuity_check(cur, sol.v, grid, times, dt);

  // Integral form: dI/dt + Phi(b) - Phi(a).
  double balance = 0.0;
  for (double t : times) {
    const double dI = (conserved_integral(cur, sol.v, grid, t + dt) -
                       conserved_integral(cur, sol.v, grid, t - dt)) / (2.0 * dt);
    const double fb = cur.flux(grid.b(), t, sol.v.partials(grid.b(), t));
    const double fa = cur.flux(grid.a(), t, sol.v.partials(grid.a(), t));
    balance = std::max(balance, std::abs(dI + fb - fa));
  }

  const auto edt = parallel_map<double>(dt_series.size(), [&](std::size_t i) {
    return continuity_check(cur, sol.v, grid, times, dt_series[i]).max_abs;
  });
  const auto edx = parallel_map<double>(cells.size(), [&](std::size_t i) {
    return continuity_check(cur, sol.v, Grid1D(gs.a, gs.b, cells[i] + 1, false), times, series_dt).max_abs;
  });
  std::vector<std::pair<double, double>> sdt, sdx;
  for (std::size_t i = 0; i < dt_series.size(); ++i) sdt.push_back({dt_series[i], edt[i]});
  for (std::size_t i = 0; i < cells.size(); ++i) sdx.push_back({(gs.b - gs.a) / cells[i], edx[i]});

  const bool pass = base.rel_max <= tol;
  const json fj = family_json(spec, sol);
  json report{{"family", fj["name"]},
              {"params", fj["params"]},
              {"current", which},
              {"grid", grid_json(grid)},
              {"times", times},
              {"dt", dt},
              {"residual", report_json(base)},
              {"integral_balance", balance},
              {"orders", {{"dt", order_table(sdt, 1e-11)}, {"dx", order_table(sdx, 1e-11)}}},
              {"tolerance", tol},
              {"pass", pass}};
  Sink sink(opt.out, out);
  write_json(sink.stream(), report);
  if (!pass) {
    err << "conserve: check failed: residual\n";
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_simulate(const json& config, const Options& opt, std::ostream& out, std::ostream& err) {
  Node root(config, "");
  allow_section(root, {"simulate"});
  std::optional<FamilySpec> spec;
  if (root.has("family")) spec = family_spec(root);
  const Grid1D grid = grid_spec(root, {0.0, 2 * std::numbers::pi, 128, true}).grid();
  double dt = 0.0, t_end = 1.0, tol = 1e-5, amplitude = 0.1;
  int stride = 1, mode = 1;
  std::string stepper = "rk4", initial = spec ? "exact" : "zero";
  if (const json* s = root.find("simulate")) {
    Node n(*s, "simulate");
    dt = number_or(n, "dt", dt);
    t_end = number_or(n, "t_end", t_end);
    stride = int_or(n, "stride", stride);
    stepper = string_or(n, "stepper", stepper);
    tol = number_or(n, "tolerance", tol);
    if (const json* i = n.find("initial")) {
      Node in(*i, "simulate.initial");
      initial = string_or(in, "kind", initial);
      amplitude = number_or(in, "amplitude", amplitude);
      mode = int_or(in, "mode", mode);
      in.done();
    }
    n.done();
  }
  root.find("times");
  root.find("tolerances");
  root.done();
  if (stepper != "rk4" && stepper != "if_rk4") throw ConfigError("simulate.stepper: expected rk4 or if_rk4");
  if (initial != "exact" && initial != "zero" && initial != "sine") {
    throw ConfigError("simulate.initial.kind: expected exact, zero or sine");
  }
  if (initial == "exact" && !spec) throw ConfigError("simulate.initial: exact start needs a family");
  if (stride < 1) throw ConfigError("simulate.stride: must be >= 1");

  const PhysParams params = spec ? spec->params : PhysParams(1.0, 1.0);
  std::optional<ExactSolution> sol;
  if (spec) sol = build_solution(*spec);
  const Topography topo = sol ? sol->topo : Topography::none();
  SampledField u0(grid, 0.0, Eigen::VectorXd::Zero(grid.n()));
  if (initial == "exact") {
    u0 = sample(sol->u, grid, 0.0);
  } else if (initial == "sine") {
    for (int i = 0; i < grid.n(); ++i) {
      u0.values[i] = amplitude * std::sin(2.0 * std::numbers::pi * mode * (grid.x(i) - grid.a()) / grid.length());
    }
  }
  const double bound = stability_bound(grid, params.alpha);
  if (dt == 0.0) dt = stepper == "rk4" ? 0.9 * bound : 1e-3;
  const PdeOptions po{dt, t_end, stride, stepper == "rk4" ? PdeStepper::rk4 : PdeStepper::if_rk4};
  const PdeRun run = pde_integrate(u0, topo, params, po);

  if (opt.out) {
    Sink sink(opt.out, out);
    auto& os = sink.stream();
    os << "t,x,u\n";
    for (std::size_t k = 0; k < run.times.size(); ++k) {
      for (int i = 0; i < grid.n(); ++i) csv_line(os, {run.times[k], grid.x(i), run.history[k][i]});
    }
  }
  double max_mean = 0.0;
  for (double m : run.mean) max_mean = std::max(max_mean, std::abs(m));
  json report{{"grid", grid_json(grid)},
              {"dt", dt},
              {"t_end", t_end},
              {"stepper", to_string(po.stepper)},
              {"stability_bound", bound},
              {"initial", initial},
              {"times", run.times},
              {"momentum", run.momentum},
              {"mass", run.mass},
              {"mean", run.mean},
              {"momentum_drift", drift(run.momentum)},
              {"max_abs_mean", max_mean}};
  report["energy"] = run.energy_valid ? json(run.energy) : json(nullptr);
  report["energy_drift"] = run.energy_valid ? json(drift(run.energy)) : json(nullptr);
  report["family"] = spec ? json(to_string(spec->family)) : json(nullptr);
  bool pass = true;
  if (initial == "exact") {
    double dev = 0.0;
    for (std::size_t k = 0; k < run.times.size(); ++k) {
      for (int i = 0; i < grid.n(); ++i) {
        dev = std::max(dev, std::abs(run.history[k][i] - sol->u(grid.x(i), run.times[k])));
      }
    }
    report["deviation"] = dev;
    report["tolerance"] = tol;
    pass = dev <= tol;
  }
  report["pass"] = pass;
  write_json(out, report);
  if (!pass) {
    err << "simulate: check failed: deviation\n";
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_reduce(const json& config, const Options& opt, std::ostream& out, std::ostream& err) {
  Node root(config, "");
  allow_section(root, {"reduce"});
  std::optional<FamilySpec> spec;
  if (root.has("family")) spec = family_spec(root);
  std::string variant = spec ? "x1" : "case2", method = "rk4";
  double mu = 2.0, zeta0 = 0.0, step = 1e-3, span = 10.0, rtol = 1e-9, tol = 1e-8;
  std::optional<std::vector<double>> init;
  if (const json* r = root.find("reduce")) {
    Node n(*r, "reduce");
    variant = string_or(n, "variant", variant);
    method = string_or(n, "method", method);
    mu = number_or(n, "mu", mu);
    zeta0 = number_or(n, "zeta0", zeta0);
    step = number_or(n, "step", step);
    span = number_or(n, "span", span);
    rtol = number_or(n, "rtol", rtol);
    tol = number_or(n, "tolerance", tol);
    if (n.has("initial")) init = numbers_or(n, "initial", {});
    n.done();
  }
  root.find("grid");
  root.find("times");
  root.find("tolerances");
  root.done();
  if (variant != "x1" && variant != "case2") throw ConfigError("reduce.variant: expected x1 or case2");
  if (method != "rk4" && method != "rk45") throw ConfigError("reduce.method: expected rk4 or rk45");
  if (init && init->size() != 4) throw ConfigError("reduce.initial: expected four values");

  std::optional<ExactSolution> sol;
  if (spec) sol = build_solution(*spec);
  const PhysParams params = spec ? spec->params : PhysParams(1.0, 1.0);
  OdeVariant ov = OdeVariant::case2(mu);
  std::optional<Profile> reference;
  if (variant == "x1") {
    if (!sol || !sol->forcing) {
      throw ConfigError("reduce: the x1 variant needs a Galilean family for its forcing");
    }
    ov = OdeVariant::x1(*sol->forcing);
    reference = sol->profile;
  } else if (sol && spec->family == Family::cubictw) {
    reference = sol->profile;
  }
  OdeState s0{zeta0, Eigen::Vector4d::Zero()};
  if (init) {
    s0.y = Eigen::Vector4d((*init)[0], (*init)[1], (*init)[2], (*init)[3]);
  } else if (reference) {
    const auto d = reference->derivatives(zeta0);
    s0.y = Eigen::Vector4d(d[0], d[1], d[2], d[3]);
  } else {
    s0.y = Eigen::Vector4d(0.1, 0.0, 0.05, 0.0);
  }
  const OdeTrajectory tr =
      ode_integrate(ov, params, s0, step, span, method == "rk4" ? OdeMethod::rk4 : OdeMethod::rk45, rtol);

  if (opt.out) {
    Sink sink(opt.out, out);
    auto& os = sink.stream();
    os << "zeta,V,V1,V2,V3\n";
    for (const auto& s : tr.states) csv_line(os, {s.zeta, s.y[0], s.y[1], s.y[2], s.y[3]});
  }
  if (tr.status != OdeTrajectory::Status::ok) {
    err << "reduce: " << tr.message;
    if (opt.out) err << "; partial trajectory written to " << *opt.out;
    err << '\n';
    return kExitFailure;
  }

  json report{{"variant", variant},
              {"method", method},
              {"params", {{"alpha", params.alpha}, {"beta", params.beta}}},
              {"step", step},
              {"span", span},
              {"zeta0", zeta0},
              {"initial", {s0.y[0], s0.y[1], s0.y[2], s0.y[3]}},
              {"states", tr.states.size()},
              {"final", {tr.states.back().y[0], tr.states.back().y[1], tr.states.back().y[2],
                         tr.states.back().y[3]}}};
  report["family"] = spec ? json(to_string(spec->family)) : json(nullptr);
  bool pass = true;
  std::string failed;
  if (variant == "case2") {
    std::vector<double> psi;
    for (const auto& s : tr.states) psi.push_back(first_integral(s.y, mu, params));
    const double d = drift(psi);
    report["mu"] = mu;
    report["first_integral"] = {{"series", psi}, {"drift", d}};
    if (d > tol) {
      pass = false;
      failed = "first_integral_drift";
    }
  } else {
    report["first_integral"] = nullptr;
  }
  if (reference) {
    double dev = 0.0;
    for (const auto& s : tr.states) dev = std::max(dev, std::abs(s.y[0] - (*reference)(s.zeta)));
    report["deviation"] = dev;
    if (dev > tol && failed.empty()) {
      pass = false;
      failed = "deviation";
    }
  } else {
    report["deviation"] = nullptr;
  }
  report["tolerance"] = tol;
  report["pass"] = pass;
  write_json(out, report);
  if (!pass) {
    err << "reduce: check failed: " << failed << '\n';
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_identity(const json& config, const Options& opt, std::ostream& out, std::ostream& err) {
  Node root(config, "");
  root.only({"identity"});
  Node n(root.at("identity"), "identity");
  root.done();
  json report = json::object();
  bool pass = true;

  if (const json* b = n.find("balance")) {
    if (!b->is_number_integer()) throw ConfigError("identity.balance: expected an integer");
    const auto e = balance_exponents(b->get<int>());
    report["balance"] = {{"n_max", b->get<int>()}, {"exponents", std::vector<int>(e.begin(), e.end())}};
  }
  if (n.has("family")) {
    const std::string name = string_or(n, "family", "");
    if (name != "fam1" && name != "fam2" && name != "fam3") {
      throw ConfigError("identity.family: expected fam1, fam2 or fam3");
    }
    auto rat = [&](const std::string& key, const char* fallback) {
      const json* v = n.find(key);
      return v ? to_rational(*v, n.child(key)) : Rational::parse(fallback);
    };
    const Family fam = family_from_string(name);
    const Rational alpha = rat("alpha", "1");
    const Rational beta = rat("beta", fam == Family::fam3 ? "2" : "6");
    CubicCoeffs<Rational> k;
    if (fam == Family::fam1) {
      const std::string branch = string_or(n, "branch", "plus");
      if (branch != "plus" && branch != "minus") throw ConfigError("identity.branch: expected plus or minus");
      k = cubic_family_1(rat("a3", "8/9"), rat("a2", "0"), rat("a1", "0"), rat("a0", "0"), beta,
                         branch == "plus" ? Branch::plus : Branch::minus);
    } else if (fam == Family::fam2) {
      k = cubic_family_2(rat("a2", "12"), rat("a0", "0"), rat("c0", "0"), beta);
    } else {
      k = cubic_family_3(rat("c2", "1"), rat("a1", "0"), rat("a0", "0"), beta);
    }
    if (const json* p = n.find("perturb")) {
      Node pn(*p, "identity.perturb");
      const std::string c = string_or(pn, "coefficient", "c0");
      const json* dv = pn.find("delta");
      const Rational delta = dv ? to_rational(*dv, "identity.perturb.delta") : Rational(0);
      pn.done();
      if (c == "c0") k.c0 += delta;
      else if (c == "c1") k.c1 += delta;
      else if (c == "c2") k.c2 += delta;
      else if (c == "c3") k.c3 += delta;
      else throw ConfigError("identity.perturb.coefficient: expected one of c0, c1, c2, c3");
    }
    const RationalPoly r = reduction_residual_poly(k.profile(), k.forcing(), alpha, beta);
    json coeffs = json::array();
    for (const auto& c : r.coefficients()) coeffs.push_back(c.to_string());
    report["family"] = name;
    report["alpha"] = alpha.to_string();
    report["beta"] = beta.to_string();
    report["coefficients"] = {{"c3", k.c3.to_string()}, {"c2", k.c2.to_string()}, {"c1", k.c1.to_string()},
                              {"c0", k.c0.to_string()}, {"a3", k.a3.to_string()}, {"a2", k.a2.to_string()},
                              {"a1", k.a1.to_string()}, {"a0", k.a0.to_string()}};
    report["residual_poly_zero"] = r.is_zero();
    report["residual_coefficients"] = coeffs;
    pass = r.is_zero();
  }
  n.done();
  if (report.empty()) throw ConfigError("identity: give a family, a balance scan, or both");
  Sink sink(opt.out, out);
  write_json(sink.stream(), report);
  if (!pass) {
    err << "identity: residual polynomial is not zero\n";
    return kExitFailure;
  }
  return kExitPass;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::catalog: return "catalog";
    case Command::emit: return "emit";
    case Command::verify: return "verify";
    case Command::conserve: return "conserve";
    case Command::simulate: return "simulate";
    case Command::reduce: return "reduce";
    case Command::identity: return "identity";
  }
  return "unknown";
}

std::optional<Command> command_from_string(std::string_view name) {
  for (Command c : {Command::catalog, Command::emit, Command::verify, Command::conserve, Command::simulate,
                    Command::reduce, Command::identity}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

int run(Command command, const json& config, const Options& options, std::ostream& out, std::ostream& err) {
  try {
    switch (command) {
      case Command::catalog: return cmd_catalog(options, out);
      case Command::emit: return cmd_emit(config, options, out);
      case Command::verify: return cmd_verify(config, options, out, err);
      case Command::conserve: return cmd_conserve(config, options, out, err);
      case Command::simulate: return cmd_simulate(config, options, out, err);
      case Command::reduce: return cmd_reduce(config, options, out, err);
      case Command::identity: return cmd_identity(config, options, out, err);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << to_string(command) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << to_string(command) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions and verification for the forced Ostrovsky equation", "ostro"};
  std::string command, config_path, out_path;
  Options options;
  app.add_option("command", command, "catalog|emit|verify|conserve|simulate|reduce|identity")
      ->required()
      ->check(CLI::IsMember({"catalog", "emit", "verify", "conserve", "simulate", "reduce", "identity"}));
  app.add_option("--config", config_path, "JSON config file");
  app.add_flag("--json", options.json, "JSON listing for catalog; other reports are always JSON");
  app.add_option("--out", out_path, "output file for the primary artifact");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  if (!out_path.empty()) options.out = out_path;
  const Command cmd = *command_from_string(command);

  json config = json::object();
  if (cmd != Command::catalog) {
    if (config_path.empty()) {
      err << "usage error: " << command << " needs --config <path>\n";
      return kExitUsage;
    }
    std::ifstream in(config_path);
    if (!in) {
      err << "config error: cannot read '" << config_path << "'\n";
      return kExitUsage;
    }
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      err << "config error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return run(cmd, config, options, out, err);
}

}  // namespace ostro::cli
