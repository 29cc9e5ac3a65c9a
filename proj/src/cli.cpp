#include "bohrlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "bohrlab/errors.hpp"
#include "bohrlab/hadamard.hpp"
#include "bohrlab/io.hpp"
#include "bohrlab/roots.hpp"

namespace bohrlab {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<double> a;
  double r = 0.0;
  double m = 1.0;
  double p = 0.0;
  double l = -1.0;
  double s = 0.0;
  std::string weights = "n";
  long trials = 10000;
  std::uint64_t seed = 1;
  std::string csv;
  std::string json_path;
  std::size_t degree = kDefaultDegree;
  std::string kind;

  bool has_a = false;
  bool has_r = false;
  bool has_m = false;
  bool has_weights = false;
  bool has_degree = false;
};

int as_int(double v, const char* flag) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9) {
    throw UsageError(std::string(flag) + " must be an integer");
  }
  return static_cast<int>(v);
}

double single_a(const Options& o) {
  if (!o.has_a) throw UsageError("--a is required");
  if (o.a.size() != 1) throw UsageError("--a takes a single value here");
  return o.a.front();
}

double require_r(const Options& o) {
  if (!o.has_r) throw UsageError("--r is required");
  return o.r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

void emit_json(const Options& o, const json& j) {
  if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
}

std::string num(double x) { return io::full(x); }

std::string conditions_line(const std::map<std::string, bool>& c) {
  std::string s;
  for (const auto& [k, v] : c) s += (s.empty() ? "" : ", ") + k + (v ? "=ok" : "=FAIL");
  return s.empty() ? "none" : s;
}

// ---- table ----------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  const auto values = o.has_a ? o.a : default_table_a_values();
  const auto rows = comparison_table(values);
  out << io::render_table(rows);
  if (!o.csv.empty()) write_file(o.csv, io::table_csv(rows));
  json j = json::array();
  for (const auto& r : rows) j.push_back(io::to_json(r));
  emit_json(o, j);
  return kExitPass;
}

// ---- constants --------------------------------------------------------------

int cmd_constants(const Options& o, std::ostream& out) {
  const auto c3 = corollary3_constants();
  const double a0 = threshold_a0();
  const double a1 = threshold_a1();
  const double res_a0 = std::abs(std::pow(1.0 - 2.0 * a0 * a0 / 3.0, 2) - (1.0 + a0) / (1.0 + 2.0 * a0));
  const double res_a1 = std::abs(1.0 - std::sqrt((1.0 + a1) / (1.0 + 2.0 * a1)) - a1 * a1);
  // m(r) touches 1 tangentially at 1/3, so locate the Bohr radius through the
  // derivative of a + (1 - a^2) r/(1 - a r) at a = 1, which has a simple root.
  const auto bohr_eq = [](double r) { return 1.0 - 2.0 * r / (1.0 - r); };
  const double bohr = bisect(bohr_eq, 0.1, 0.5, 0.0);
  const auto id1_eq = [](double r) { return r * bombieri_function(r) - 1.0; };
  const double r_id1 = bisect(id1_eq, 0.5, std::numbers::sqrt2 / 2.0, 0.0);
  const double r_diff = theorem_E_radius(1, 1.0).radius;
  struct Line {
    const char* name;
    double value;
    double residual;
  };
  const Line lines[] = {
      {"y", c3.y, c3.residual},
      {"area_bohr_radius", c3.radius, std::abs(c3.radius - std::pow(3.0, -1.0 / 6.0))},
      {"a0", a0, res_a0},
      {"a1", a1, res_a1},
      {"R_id0", bohr, std::abs(bohr_eq(bohr))},
      {"R_id1", r_id1, std::abs(id1_eq(r_id1))},
      {"R_id_to_d", r_diff, std::abs(r_diff - (1.0 - std::sqrt(2.0 / 3.0)))},
  };
  json j = json::object();
  char buf[160];
  for (const auto& ln : lines) {
    std::snprintf(buf, sizeof buf, "%-18s %.17g  residual %.3g\n", ln.name, ln.value, ln.residual);
    out << buf;
    j[ln.name] = json{{"value", ln.value}, {"residual", ln.residual}};
  }
  emit_json(o, j);
  return kExitPass;
}

// ---- bound ------------------------------------------------------------------

int cmd_bound(const Options& o, std::ostream& out) {
  const std::string& k = o.kind;
  json j;
  bool ok = true;
  if (k == "g_ratio") {
    const auto c = WeightSequence::parse(o.weights);
    const double r = require_r(o);
    const auto rep = g_ratio_bound(c, r);
    out << "g_ratio weights " << c.describe() << " r = " << num(r) << "\n  s = " << rep.s << ", r in ["
        << num(rep.r_window.first) << ", " << num(rep.r_window.second) << "]\n  G(r) = "
        << (rep.value ? num(*rep.value) : std::string("undefined")) << "\n  conditions: "
        << conditions_line(rep.conditions_ok) << "\n  " << rep.notes << "\n";
    j = io::to_json(rep);
    ok = rep.all_ok();
  } else if (k == "area") {
    const LacunarySpec spec(as_int(o.m, "--m"), as_int(o.p, "--p"));
    const double r = require_r(o);
    const auto ab = area_bound(spec, r);
    const double v = ab.value(r, 1.0);
    out << "area m = " << spec.m << " p = " << spec.p << " r = " << num(r) << "\n  s = " << ab.s
        << ", r^" << 2 * spec.m << " in [" << num(ab.r_window.first) << ", " << num(ab.r_window.second)
        << "]\n  S_r f <= pi * " << ab.bound_coeff << " * r^" << ab.exponent << " * ||f||^2 = " << num(v)
        << " * ||f||^2\n";
    j = io::to_json(ab);
    j["value"] = v;
    j["r"] = r;
  } else if (k == "theorem_D" || k == "theorem_3") {
    const auto c = WeightSequence::parse(o.weights);
    const int m = as_int(o.m, "--m");
    const int l = as_int(o.l, "--l");
    const double a = single_a(o);
    const double r = require_r(o);
    MajorantBound mb;
    if (k == "theorem_D") {
      mb = theorem_D_exact(c, m, l, r, a);
    } else {
      const int s = o.s > 0 ? as_int(o.s, "--s") : theorem_3_index(c, m, r, a);
      mb = theorem_3_bounds(c, m, l, s, r, a);
    }
    out << k << " weights " << c.describe() << " m = " << m << " l = " << l << " a = " << num(a)
        << " r = " << num(r) << "\n";
    if (mb.kind == MajorantKind::ExactD) {
      out << "  value = " << num(mb.upper) << "\n";
    } else {
      out << "  s = " << mb.s << "\n  " << num(mb.lower) << " <= sup <= " << num(mb.upper) << "\n";
    }
    out << "  conditions: " << conditions_line(mb.conditions_ok) << "\n";
    j = io::to_json(mb);
    ok = mb.all_ok();
  } else if (k == "theorem_E") {
    const auto re = theorem_E_radius(as_int(o.m, "--m"), single_a(o));
    out << "theorem_E r_m(a) = " << num(re.radius) << " (condition " << (re.condition_ok ? "ok" : "FAIL") << ")\n";
    j = io::to_json(re);
    ok = re.condition_ok;
  } else if (k == "old_derivative") {
    const double v = old_derivative_majorant(require_r(o), single_a(o));
    out << "old_derivative M_r f' <= " << num(v) << "\n";
    j = json{{"value", v}};
  } else if (k == "bombieri") {
    const double v = bombieri_function(require_r(o));
    out << "bombieri m(r) = " << num(v) << "\n";
    j = json{{"value", v}};
  } else {
    throw UsageError("bound: unknown kind '" + k +
                     "' (g_ratio, area, theorem_D, theorem_3, theorem_E, old_derivative, bombieri)");
  }
  emit_json(o, j);
  return ok ? kExitPass : kExitViolation;
}

// ---- radius -----------------------------------------------------------------

int cmd_radius(const Options& o, std::ostream& out) {
  const std::string& k = o.kind;
  double value = 0.0;
  json j;
  bool ok = true;
  if (k == "theoremE" || k == "theorem_E") {
    const auto re = theorem_E_radius(as_int(o.m, "--m"), single_a(o));
    value = re.radius;
    ok = re.condition_ok;
    j = io::to_json(re);
  } else if (k == "theoremD" || k == "theorem_D") {
    const auto c = WeightSequence::parse(o.weights);
    const int m = as_int(o.m, "--m");
    const int l = as_int(o.l, "--l");
    const double a = single_a(o);
    value = radius_from_bound([&](double r) { return theorem_D_exact(c, m, l, r, a).upper; }, 1.0,
                              std::min(a, std::nextafter(1.0, 0.0)));
    ok = theorem_D_exact(c, m, l, value, a).all_ok();
    j = json{{"radius", value}, {"condition_ok", ok}};
  } else if (k == "bombieri") {
    value = bombieri_radius(single_a(o));
  } else if (k == "old_lower") {
    value = old_lower_bound(single_a(o));
  } else if (k == "upper") {
    value = upper_bound(single_a(o));
  } else if (k == "new_lower") {
    value = new_lower_bound(single_a(o));
  } else if (k == "area") {
    value = corollary3_constants().radius;
  } else {
    throw UsageError("radius: unknown kind '" + k +
                     "' (theoremE, theoremD, bombieri, old_lower, upper, new_lower, area)");
  }
  if (j.is_null()) j = json{{"radius", value}};
  out << k << " radius " << num(value);
  if (!ok) out << " (condition FAIL)";
  out << "\n";
  emit_json(o, j);
  return ok ? kExitPass : kExitViolation;
}

// ---- verify -----------------------------------------------------------------

FuzzParams default_params(const std::string& id, const Options& o) {
  FuzzParams p;
  p.weights = o.weights;
  p.m = as_int(o.m, "--m");
  p.p = as_int(o.p, "--p");
  p.l = as_int(o.l, "--l");
  p.s = as_int(o.s, "--s");
  if (o.has_degree) p.degree = o.degree;
  if (id == "g_ratio" && o.has_r) p.radii = {o.r};
  if (id == "area") p.r = o.has_r ? o.r : std::sqrt(0.6);
  if (id == "bohr_13") p.r = o.has_r ? o.r : 1.0 / 3.0;
  if (id == "theorem_D") {
    p.a = o.has_a ? single_a(o) : 0.6;
    if (o.has_r) {
      p.r = o.r;
    } else {
      if (o.has_weights || o.has_m) throw UsageError("verify theorem_D: --r is required with custom weights or m");
      p.r = theorem_E_radius(1, p.a).radius;
    }
  }
  if (id == "theorem_3") {
    p.a = o.has_a ? single_a(o) : 0.4;
    if (o.has_r) {
      p.r = o.r;
    } else {
      if (o.has_weights || o.has_m) throw UsageError("verify theorem_3: --r is required with custom weights or m");
      // c_n = n, m = 1: the window for r/a is [s/(s+1), (s+1)/(s+2)].
      const auto root = solve_s(p.a);
      if (!root.s) throw UsageError("verify theorem_3: pass --r, no window root for this a");
      const double s = std::floor(*root.s);
      p.s = static_cast<int>(s);
      p.r = p.a * 0.5 * (s / (s + 1.0) + (s + 1.0) / (s + 2.0));
    }
  }
  if (id == "old_derivative_bound") {
    p.a = o.has_a ? single_a(o) : 0.4;
    p.r = o.has_r ? o.r : old_lower_bound(p.a);
  }
  return p;
}

std::string summary_line(const FuzzReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-21s trials %ld seed %llu max_ratio %.12f violations: %ld grazing: %ld infeasible: %ld %s",
                r.bound_id.c_str(), r.trials, static_cast<unsigned long long>(r.seed), r.max_ratio, r.violations,
                r.grazing, r.infeasible, r.passed() ? "PASS" : "FAIL");
  return buf;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.kind == "all") {
    ids = fuzz_bound_ids();
  } else {
    const auto& known = fuzz_bound_ids();
    if (std::find(known.begin(), known.end(), o.kind) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw UsageError("verify: unknown suite '" + o.kind + "' (" + list + ", all)");
    }
    ids = {o.kind};
  }
  if (o.trials < 0) throw UsageError("--trials must be >= 0");
  bool pass = true;
  json reports = json::array();
  for (const auto& id : ids) {
    const auto rep = fuzz(id, default_params(id, o), o.trials, o.seed);
    out << summary_line(rep) << "\n";
    pass = pass && rep.passed();
    reports.push_back(io::to_json(rep));
  }
  emit_json(o, ids.size() == 1 ? reports.front() : reports);
  return pass ? kExitPass : kExitViolation;
}

// ---- export -----------------------------------------------------------------

void emit_csv(const Options& o, const std::string& text, std::ostream& out) {
  if (o.csv.empty()) out << text;
  else write_file(o.csv, text);
}

int cmd_export(const Options& o, std::ostream& out) {
  const std::string& k = o.kind;
  if (k == "table") {
    const auto values = o.has_a ? o.a : default_table_a_values();
    const auto rows = comparison_table(values);
    emit_csv(o, io::table_csv(rows), out);
    json j = json::array();
    for (const auto& r : rows) j.push_back(io::to_json(r));
    emit_json(o, j);
  } else if (k == "series") {
    // z^m (z + a)/(1 + a z) with --a, otherwise a random bounded function from --seed.
    const int m = as_int(o.m, "--m");
    if (m < 0) throw UsageError("--m must be >= 0");
    if (o.degree < 16) throw UsageError("--degree must be >= 16");
    PowerSeries f;
    if (o.has_a) {
      const double a = single_a(o);
      const auto base = mobius_series(a, o.degree);
      std::vector<Complex> c(o.degree + static_cast<std::size_t>(m) + 1);
      for (std::size_t n = 0; n <= base.degree(); ++n) c[n + static_cast<std::size_t>(m)] = base[n];
      std::optional<TailBound> tail;
      if (const auto& t = base.tail(); t && t->q > 0.0) tail = TailBound{t->B * std::pow(t->q, -m), t->q};
      f = PowerSeries(std::move(c), static_cast<std::size_t>(m), tail);
    } else {
      TrialRng rng(o.seed, 0);
      f = generators::bounded(rng, o.degree).f;
    }
    const std::string text = io::to_json(f).dump() + "\n";
    if (o.json_path.empty()) out << text;
    else write_file(o.json_path, text);
  } else if (k == "g_of_t") {
    const double a = single_a(o);
    std::ostringstream os;
    os << "t,g\n";
    for (int i = 0; i <= 1900; ++i) {
      const double t = 1.0 + i / 100.0;
      os << num(t) << ',' << num(g_of_t(t, a)) << '\n';
    }
    emit_csv(o, os.str(), out);
  } else if (k == "g_ratio") {
    const auto c = WeightSequence::parse(o.weights);
    std::ostringstream os;
    os << "r,s,G,cond1\n";
    for (int i = 1; i <= 99; ++i) {
      const double r = i / 100.0;
      const auto rep = g_ratio_bound(c, r);
      os << num(r) << ',' << rep.s << ',' << (rep.value ? num(*rep.value) : std::string()) << ','
         << (rep.all_ok() ? 1 : 0) << '\n';
    }
    emit_csv(o, os.str(), out);
  } else if (k == "bombieri") {
    std::ostringstream os;
    os << "r,m\n";
    const double edge = std::numbers::sqrt2 / 2.0;
    for (int i = 0; i <= 100; ++i) {
      const double r = edge * i / 100.0;
      os << num(r) << ',' << num(bombieri_function(r)) << '\n';
    }
    emit_csv(o, os.str(), out);
  } else {
    throw UsageError("export: unknown target '" + k + "' (table, series, g_of_t, g_ratio, bombieri)");
  }
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr radius and majorant bounds for Hadamard convolution operators", "bohr-lab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  Options o;
  auto* a_opt = app.add_option("--a", o.a, "fixed initial coefficient |a_m| (table: comma list)")->delimiter(',');
  auto* r_opt = app.add_option("--r", o.r, "radius");
  auto* m_opt = app.add_option("--m", o.m, "vanishing order / lacunary step");
  app.add_option("--p", o.p, "lacunary offset");
  app.add_option("--l", o.l, "shift exponent");
  app.add_option("--s", o.s, "window index (theorem_3)");
  auto* w_opt = app.add_option("--weights", o.weights, "weight rule: n, const:v, affine:a,b, power:k, binom:m, recip:s, list:[..]");
  app.add_option("--trials", o.trials, "fuzz trials");
  app.add_option("--seed", o.seed, "fuzz seed")->envname("BOHRLAB_SEED");
  app.add_option("--csv", o.csv, "write CSV to PATH");
  app.add_option("--json", o.json_path, "write JSON to PATH");
  auto* d_opt = app.add_option("--degree", o.degree, "truncation degree N");

  auto* table = app.add_subcommand("table", "comparison table of radius bounds");
  auto* constants = app.add_subcommand("constants", "named constants with residuals");
  auto* bound = app.add_subcommand("bound", "evaluate a bound");
  bound->add_option("kind", o.kind, "g_ratio, area, theorem_D, theorem_3, theorem_E, old_derivative, bombieri")->required();
  auto* radius = app.add_subcommand("radius", "evaluate a radius");
  radius->add_option("kind", o.kind, "theoremE, theoremD, bombieri, old_lower, upper, new_lower, area")->required();
  auto* verify = app.add_subcommand("verify", "fuzz an inequality");
  verify->add_option("suite", o.kind, "g_ratio, area, theorem_D, theorem_3, old_derivative_bound, bohr_13, all")->required();
  auto* exp = app.add_subcommand("export", "write plot-ready CSV or series JSON");
  exp->add_option("target", o.kind, "table, series, g_of_t, g_ratio, bombieri")->required();
  for (auto* sub : {table, constants, bound, radius, verify, exp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "bohr-lab: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  o.has_a = a_opt->count() > 0;
  o.has_r = r_opt->count() > 0;
  o.has_m = m_opt->count() > 0;
  o.has_weights = w_opt->count() > 0;
  o.has_degree = d_opt->count() > 0;

  try {
    if (*table) return cmd_table(o, out);
    if (*constants) return cmd_constants(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*radius) return cmd_radius(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "bohr-lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // DomainError, ContractError and UnsupportedRange all derive from logic_error.
    err << "bohr-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bohrlab
