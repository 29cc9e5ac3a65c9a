#include "bohrlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bohrlab/errors.hpp"
#include "bohrlab/roots.hpp"

namespace bohrlab {

namespace {

constexpr double kTol = 1e-12;

void require_unit_radius(double r, const char* op) {
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError(std::string(op) + ": r must lie in [0, 1)");
}

void require_coefficient(double a, const char* op) {
  if (!(a > 0.0) || !(a <= 1.0)) throw DomainError(std::string(op) + ": a must lie in (0, 1]");
}

// r^k with the r = 0 limit made explicit.
double power_or_limit(double r, int k, const char* op) {
  if (r > 0.0) return std::pow(r, k);
  if (k > 0) return 0.0;
  if (k == 0) return 1.0;
  throw DomainError(std::string(op) + ": r = 0 with a negative total exponent");
}

// (1/a - a) a^{-m} r^l sum_{n >= m+1} c_n (ar)^n
double mobius_tail_term(const WeightSequence& c, int m, int l, double r, double a) {
  if (r == 0.0) {
    const int k = m + 1 + l;  // leading power of r in the tail
    return k > 0 ? 0.0 : (1.0 / a - a) * a * c(m + 1) * power_or_limit(r, k, "majorant bound");
  }
  return (1.0 / a - a) * std::pow(a, -m) * std::pow(r, l) * weighted_sum(c, a * r, m + 1);
}

struct MajorantParts {
  double base = 0.0;
  double tail = 0.0;
};

MajorantParts majorant_parts(const WeightSequence& c, int m, int l, double r, double a, const char* op) {
  require_unit_radius(r, op);
  require_coefficient(a, op);
  if (m < 0) throw ContractError(std::string(op) + ": m must be >= 0");
  if (c.start_index() > m) throw ContractError(std::string(op) + ": weights must be defined from n = m");
  MajorantParts parts;
  parts.base = c(m) * a * power_or_limit(r, m + l, op);
  parts.tail = mobius_tail_term(c, m, l, r, a);
  return parts;
}

}  // namespace

BoundReport g_ratio_bound(const WeightSequence& c, double r) {
  require_unit_radius(r, "g_ratio_bound");
  const auto [d, scale] = normalize(c);
  BoundReport rep;
  rep.s = interval_index(d, r);
  const double lo = rep.s == 1 ? 0.0 : std::sqrt(tail_ratio_inf(d, rep.s - 1));
  const double hi = std::sqrt(tail_ratio_inf(d, rep.s));
  rep.r_window = {lo, hi};
  const bool cond1 = rep.s <= 1 || check_condition_1(d, r, rep.s);
  rep.conditions_ok["cond1"] = cond1;
  if (cond1) rep.value = d(rep.s) * std::pow(r, 2 * rep.s - 2);
  std::ostringstream notes;
  notes << "G(r) = c_s r^(2s-2) with c normalised by c_1 = " << scale;
  if (rep.s <= 1) notes << "; s = 1 window needs no growth condition";
  if (!cond1) notes << "; growth condition fails, bound not established";
  rep.notes = notes.str();
  return rep;
}

double AreaBound::value(double r, double sup_norm) const {
  return std::numbers::pi * bound_coeff * std::pow(r, exponent) * sup_norm * sup_norm;
}

AreaBound area_bound(const LacunarySpec& spec, double r) {
  require_unit_radius(r, "area_bound");
  const LacunarySpec checked(spec.m, spec.p);
  const double m = checked.m;
  const double p = checked.p;
  const double b = std::pow(r, 2 * checked.m);
  auto right = [&](int s) { return (m * s + p) / (m * (s + 1) + p); };
  auto left = [&](int s) {
    if (s == 0) return 0.0;
    return std::max(0.0, (m * (s - 1) + p) / (m * s + p));
  };
  // right(s) >= b  <=>  s >= (b(m+p) - p) / (m(1-b))
  int s = std::max(0, static_cast<int>(std::ceil((b * (m + p) - p) / (m * (1.0 - b)))));
  while (s > 0 && b <= right(s - 1) * (1.0 + kTol)) --s;
  while (b > right(s) * (1.0 + kTol)) ++s;
  AreaBound out;
  out.m = checked.m;
  out.p = checked.p;
  out.s = s;
  out.r_window = {left(s), right(s)};
  out.bound_coeff = checked.m * s + checked.p;
  out.exponent = 2 * out.bound_coeff;
  return out;
}

AreaBohrConstants corollary3_constants() {
  auto g = [](double x) { return std::pow(x, -1.0 / (2.0 * x)); };
  auto h = [](double x) { return std::sqrt(x / (x + 1.0)); };
  AreaBohrConstants k;
  k.y = bisect([&](double x) { return g(x) - h(x); }, 1.0, 10.0, 1e-13);
  k.residual = std::abs(g(k.y) - h(k.y));
  int s = 1;
  while (g(s) >= h(s)) ++s;
  k.critical_window = s;
  // Windows 1..s-1 hold on all of [0, h(s-1)]; inside window s the sharp
  // bound s r^{2s} stays <= 1 up to r = g(s).
  k.radius = std::max(g(s), h(s - 1));
  return k;
}

bool MajorantBound::all_ok() const {
  return std::all_of(conditions_ok.begin(), conditions_ok.end(), [](const auto& kv) { return kv.second; });
}

MajorantBound theorem_D_exact(const WeightSequence& c, int m, int l, double r, double a) {
  const auto parts = majorant_parts(c, m, l, r, a, "theorem_D_exact");
  MajorantBound out;
  out.kind = MajorantKind::ExactD;
  out.lower = out.upper = parts.base + parts.tail;
  out.conditions_ok["a_gt_r"] = a > r;
  out.conditions_ok["ratio"] = r / a <= tail_ratio_inf(c, m + 1) * (1.0 + kTol);
  out.conditions_ok["summable"] = a * r < c.ratio_limit();
  return out;
}

MajorantBound theorem_3_bounds(const WeightSequence& c, int m, int l, int s, double r, double a) {
  if (s < 2) throw ContractError("theorem_3_bounds: s must be >= 2");
  const auto parts = majorant_parts(c, m, l, r, a, "theorem_3_bounds");
  const double x = r / a;
  MajorantBound out;
  out.kind = MajorantKind::TwoSided3;
  out.s = s;
  out.lower = parts.base + parts.tail;
  out.upper = parts.base + std::sqrt(c(m + s) / c(m + 1) * std::pow(x, s - 1)) * parts.tail;
  out.conditions_ok["a_gt_r"] = a > r;
  const bool waived = s == 2 && c(m + 1) == 1.0;
  out.conditions_ok["cond0"] = waived || check_condition_1(c.shifted(m), std::sqrt(x), s);
  out.conditions_ok["cond1"] = tail_ratio_inf(c, s + m - 1) <= x * (1.0 + kTol) &&
                               x <= tail_ratio_inf(c, s + m) * (1.0 + kTol);
  return out;
}

int theorem_3_index(const WeightSequence& c, int m, double r, double a) {
  require_coefficient(a, "theorem_3_index");
  if (!(r < a)) throw DomainError("theorem_3_index: need r < a");
  return interval_index(c.shifted(m), std::sqrt(r / a));
}

RadiusWithCondition theorem_E_radius(int m, double a) {
  if (m < 1) throw DomainError("theorem_E_radius: m must be >= 1");
  require_coefficient(a, "theorem_E_radius");
  const double q = (1.0 + a) / (1.0 + 2.0 * a);
  RadiusWithCondition out;
  out.radius = (1.0 - std::pow(q, 1.0 / (m + 1))) / a;
  out.condition_ok = std::pow(1.0 - 2.0 * a * a / (m + 2), m + 1) <= q;
  return out;
}

double bombieri_function(double r) {
  if (!(r >= 0.0)) throw DomainError("bombieri_function: r must be >= 0");
  if (r <= 1.0 / 3.0) return 1.0;
  constexpr double kEdge = std::numbers::sqrt2 / 2.0;
  if (r > kEdge * (1.0 + 4e-16)) {
    throw UnsupportedRange("bombieri_function: no closed form known for r > 1/sqrt(2)");
  }
  return (3.0 - std::sqrt(8.0 * std::max(0.0, 1.0 - r * r))) / r;
}

double bombieri_radius(double a) {
  if (!(a > 0.5) || !(a <= 1.0)) throw UnsupportedRange("bombieri_radius: known only for 1/2 < a <= 1");
  return 1.0 / (1.0 + 2.0 * a);
}

double old_lower_bound(double a) {
  if (!(a >= 0.0) || !(a < 1.0)) throw DomainError("old_lower_bound: a must lie in [0, 1)");
  return 1.0 - std::sqrt((1.0 + a) / (2.0 + a));
}

double upper_bound(double a) {
  if (!(a > 0.0) || !(a < 1.0)) throw DomainError("upper_bound: a must lie in (0, 1)");
  return (1.0 - std::sqrt((1.0 + a) / (1.0 + 2.0 * a))) / a;
}

double old_derivative_majorant(double r, double a) {
  require_unit_radius(r, "old_derivative_majorant");
  if (!(a >= 0.0) || !(a <= 1.0)) throw DomainError("old_derivative_majorant: a must lie in [0, 1]");
  return a + (1.0 / ((1.0 - r) * (1.0 - r)) - 1.0) * (1.0 - a * a);
}

}  // namespace bohrlab
