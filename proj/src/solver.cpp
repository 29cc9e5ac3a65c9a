#include "bohrlab/solver.hpp"

#include <cmath>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/roots.hpp"

namespace bohrlab {

namespace {

constexpr double kRootTol = 1e-12;
constexpr int kMonotoneGrid = 4096;

// First sign change of f on a uniform grid over (lo, hi), then bisection.
template <class F>
double scan_and_bisect(F&& f, double lo, double hi, double tol, int cells = 1000) {
  double prev_x = lo + (hi - lo) / cells;
  double prev = f(prev_x);
  for (int i = 2; i < cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double v = f(x);
    if (std::signbit(v) != std::signbit(prev) || v == 0.0) return bisect(f, prev_x, x, tol);
    prev_x = x;
    prev = v;
  }
  throw DomainError("scan_and_bisect: no sign change found");
}

}  // namespace

double g_of_t(double t, double a) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("g_of_t: t must be >= 1");
  if (!(a > 0.0) || !(a < 1.0)) throw DomainError("g_of_t: a must lie in (0, 1)");
  const double k = std::floor(t);
  const double x = t / (t + 1.0);
  const double factor = std::sqrt((k + 1.0) / 2.0 * std::pow(x, k - 1.0));
  const double d = 1.0 - a * a * x;
  return a + factor * (1.0 / a - a) * (1.0 / (d * d) - 1.0);
}

SolveResult solve_s(double a) {
  SolveResult out;
  if (!(a > 0.0) || !(a < 1.0)) {
    out.status = SolveStatus::InvalidArgument;
    out.message = "a must lie in (0, 1)";
    return out;
  }
  if (g_of_t(2.0, a) > 1.0) {
    out.status = SolveStatus::TheoremERegime;
    out.message = "g(2) > 1: a exceeds a0, the exact radius r_1(a) applies";
    return out;
  }
  double lo = 2.0;
  double hi = 4.0;
  while (g_of_t(hi, a) <= 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) {
      out.status = SolveStatus::InvalidArgument;
      out.message = "no crossing below t = 1e15";
      return out;
    }
  }
  // g is increasing on each [n, n+1) and continuous at integers; confirm on a
  // grid over [2, hi] including every integer breakpoint that fits.
  double prev = g_of_t(2.0, a);
  for (int i = 1; i <= kMonotoneGrid; ++i) {
    const double t = 2.0 + (hi - 2.0) * i / kMonotoneGrid;
    const double v = g_of_t(t, a);
    if (v < prev - 1e-12 * std::abs(prev)) {
      out.status = SolveStatus::NotMonotone;
      out.message = "g decreases near t = " + std::to_string(t);
      return out;
    }
    prev = v;
  }
  const double s = bisect([a](double t) { return g_of_t(t, a) - 1.0; }, lo, hi, kRootTol);
  out.status = SolveStatus::Ok;
  out.s = s;
  out.residual = std::abs(g_of_t(s, a) - 1.0);
  return out;
}

double new_lower_bound(double a) {
  const auto res = solve_s(a);
  if (res.status != SolveStatus::Ok) throw UnsupportedRange("new_lower_bound: " + res.message);
  return a * *res.s / (1.0 + *res.s);
}

double threshold_a0() {
  return scan_and_bisect(
      [](double a) {
        const double u = 1.0 - 2.0 * a * a / 3.0;
        return u * u - (1.0 + a) / (1.0 + 2.0 * a);
      },
      0.0, 1.0, 0.0);
}

double threshold_a1() {
  return scan_and_bisect([](double a) { return 1.0 - std::sqrt((1.0 + a) / (1.0 + 2.0 * a)) - a * a; },
                         0.0, 1.0, 0.0);
}

std::vector<double> default_table_a_values() {
  return {0.429, 0.42, 0.4, 0.38, 0.36, 0.34, 0.32, 0.3, 0.28, 0.26};
}

std::vector<RadiusRow> comparison_table(std::span<const double> a_values) {
  std::vector<RadiusRow> rows;
  rows.reserve(a_values.size());
  for (const double a : a_values) {
    if (!(a > 0.0) || !(a < 1.0)) throw DomainError("comparison_table: a must lie in (0, 1)");
    RadiusRow row;
    row.a = a;
    row.old_lower = old_lower_bound(a);
    row.upper = upper_bound(a);
    const auto res = solve_s(a);
    if (res.status == SolveStatus::Ok) {
      row.s = res.s;
      row.s_floor = static_cast<int>(std::floor(*res.s));
      row.new_lower = a * *res.s / (1.0 + *res.s);
      row.regime = "new-bound";
    } else if (res.status == SolveStatus::TheoremERegime) {
      row.regime = "theorem-E";
    } else {
      throw DomainError("comparison_table: " + res.message);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double radius_from_bound(const std::function<double(double)>& bound, double target, double r_max,
                         double tol) {
  if (!(r_max >= 0.0)) throw DomainError("radius_from_bound: r_max must be >= 0");
  if (bound(0.0) > target) throw DomainError("radius_from_bound: bound(0) exceeds the target");
  return bisect_predicate([&](double r) { return bound(r) <= target; }, 0.0, r_max, tol);
}

}  // namespace bohrlab
