#include "bohrlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab::io {

using nlohmann::json;

namespace {

const char* kind_name(MajorantKind k) { return k == MajorantKind::ExactD ? "exact" : "two_sided"; }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const PowerSeries& f) {
  json coeffs = json::array();
  for (const Complex& z : f.coeffs()) coeffs.push_back({z.real(), z.imag()});
  json tail = nullptr;
  if (const auto& t = f.tail()) tail = json{{"B", t->B}, {"q", t->q}};
  return json{{"vanish_order", f.vanish_order()}, {"coeffs", std::move(coeffs)}, {"tail", std::move(tail)}};
}

PowerSeries series_from_json(const json& j) {
  try {
    std::vector<Complex> c;
    for (const auto& pair : j.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2) throw ContractError("series json: coefficients are [re, im] pairs");
      c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (c.empty()) throw ContractError("series json: empty coefficient list");
    std::optional<TailBound> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
      tail = TailBound{j.at("tail").at("B").get<double>(), j.at("tail").at("q").get<double>()};
    }
    if (j.contains("vanish_order")) return PowerSeries(std::move(c), j.at("vanish_order").get<std::size_t>(), tail);
    return PowerSeries(std::move(c), tail);
  } catch (const json::exception& e) {
    throw ContractError(std::string("series json: ") + e.what());
  }
}

json to_json(const BoundReport& r) {
  return json{{"s", r.s},
              {"r_window", {r.r_window.first, r.r_window.second}},
              {"value", optional_number(r.value)},
              {"conditions_ok", r.conditions_ok},
              {"all_ok", r.all_ok()},
              {"notes", r.notes}};
}

json to_json(const AreaBound& b) {
  return json{{"m", b.m},
              {"p", b.p},
              {"s", b.s},
              {"window_r2m", {b.r_window.first, b.r_window.second}},
              {"bound_coeff", b.bound_coeff},
              {"exponent", b.exponent}};
}

json to_json(const MajorantBound& b) {
  return json{{"kind", kind_name(b.kind)}, {"lower", b.lower},         {"upper", b.upper},
              {"s", b.s},                  {"conditions_ok", b.conditions_ok}, {"all_ok", b.all_ok()}};
}

json to_json(const RadiusWithCondition& r) {
  return json{{"radius", r.radius}, {"condition_ok", r.condition_ok}};
}

json to_json(const AreaBohrConstants& c) {
  return json{{"y", c.y}, {"residual", c.residual}, {"radius", c.radius}, {"critical_window", c.critical_window}};
}

json to_json(const RadiusRow& row) {
  return json{{"a", row.a},
              {"old_lower", row.old_lower},
              {"s", optional_number(row.s)},
              {"s_floor", row.s_floor ? json(*row.s_floor) : json(nullptr)},
              {"new_lower", optional_number(row.new_lower)},
              {"upper", row.upper},
              {"regime", row.regime}};
}

json to_json(const FuzzReport& r) {
  return json{{"bound_id", r.bound_id},
              {"trials", r.trials},
              {"seed", r.seed},
              {"tol", r.tol},
              {"max_ratio", r.max_ratio},
              {"max_observed", r.max_observed},
              {"bound", r.bound},
              {"lower", optional_number(r.lower)},
              {"argmax_witness", r.argmax_witness},
              {"violations", r.violations},
              {"grazing", r.grazing},
              {"infeasible", r.infeasible},
              {"evaluations", r.evaluations},
              {"passed", r.passed()}};
}

json to_json(const AreaSearchResult& r) {
  return json{{"best_ratio", r.best_ratio},
              {"best_label", r.best_label},
              {"extremal_ratio", r.extremal_ratio},
              {"evaluated", r.evaluated}};
}

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string truncate_decimals(double x, int places) {
  if (places < 0 || places > 15) throw ContractError("truncate_decimals: places must lie in [0, 15]");
  if (!std::isfinite(x)) return full(x);
  // glibc prints the exact binary expansion, so cutting the string truncates
  // the double itself.
  char buf[400];
  std::snprintf(buf, sizeof buf, "%.30f", x);
  std::string s(buf);
  const auto dot = s.find('.');
  s.resize(places == 0 ? dot : dot + 1 + static_cast<std::size_t>(places));
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    if (s.front() == '-') s.erase(0, 1);
  }
  return s;
}

std::string table_csv(std::span<const RadiusRow> rows) {
  std::ostringstream os;
  os << "a,old_lower,s_floor,new_lower,upper\n";
  for (const auto& r : rows) {
    os << full(r.a) << ',' << full(r.old_lower) << ',';
    if (r.s_floor) os << *r.s_floor;
    os << ',';
    if (r.new_lower) os << full(*r.new_lower);
    os << ',' << full(r.upper) << '\n';
  }
  return os.str();
}

std::string render_table(std::span<const RadiusRow> rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-10s %-5s %-10s %-10s\n", "a", "r~(a)", "[s]", "r_s(a)", "r^(a)");
  os << line;
  for (const auto& r : rows) {
    char a[32];
    std::snprintf(a, sizeof a, "%g", r.a);
    if (r.s_floor && r.new_lower) {
      std::snprintf(line, sizeof line, "%-8s %-10s %-5d %-10s %-10s\n", a, truncate_decimals(r.old_lower).c_str(),
                    *r.s_floor, truncate_decimals(*r.new_lower).c_str(), truncate_decimals(r.upper).c_str());
    } else {
      std::snprintf(line, sizeof line, "%-8s %-10s %-16s %-10s (exact)\n", a, truncate_decimals(r.old_lower).c_str(),
                    "Theorem E regime", truncate_decimals(r.upper).c_str());
    }
    os << line;
  }
  return os.str();
}

}  // namespace bohrlab::io
