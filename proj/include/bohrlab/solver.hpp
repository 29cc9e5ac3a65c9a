#pragma once

// Lower bounds for the Bohr radius of the differentiation operator with a
// fixed initial coefficient: the piecewise function g(t), its unit crossing,
// the comparison table, and generic bound-to-radius inversion.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bohrlab {

/// a + sqrt(([t]+1)/2 (t/(t+1))^{[t]-1}) (1/a - a) (1/(1 - a^2 t/(t+1))^2 - 1)
double g_of_t(double t, double a);

enum class SolveStatus {
  Ok,
  TheoremERegime,  // g(2) > 1: a > a0, where the exact radius is known
  InvalidArgument,
  NotMonotone,
};

struct SolveResult {
  SolveStatus status = SolveStatus::InvalidArgument;
  std::optional<double> s;
  double residual = 0.0;  // |g(s, a) - 1|
  std::string message;
};

/// The unique t >= 2 with g(t, a) = 1, for 0 < a <= a0. Monotonicity of g is
/// checked on a grid before bisecting.
SolveResult solve_s(double a);

/// a s / (1 + s); throws UnsupportedRange when solve_s finds no root.
double new_lower_bound(double a);

/// Root in (0, 1) of (1 - 2a^2/3)^2 = (1+a)/(1+2a).
double threshold_a0();
/// Root in (0, 1) of 1 - sqrt((1+a)/(1+2a)) = a^2.
double threshold_a1();

struct RadiusRow {
  double a = 0.0;
  double old_lower = 0.0;          // 1 - sqrt((1+a)/(2+a))
  std::optional<int> s_floor;      // [s]
  std::optional<double> s;         // root of g(t) = 1
  std::optional<double> new_lower; // a s / (1 + s)
  double upper = 0.0;              // (1/a)(1 - sqrt((1+a)/(1+2a)))
  std::string regime;              // "new-bound" or "theorem-E"
};

/// The ten coefficients tabulated for the comparison, 0.429 down to 0.26.
std::vector<double> default_table_a_values();

std::vector<RadiusRow> comparison_table(std::span<const double> a_values);

/// Largest r in [0, r_max] with bound(r) <= target, for bound continuous and
/// non-decreasing. Throws DomainError when bound(0) > target.
double radius_from_bound(const std::function<double(double)>& bound, double target, double r_max,
                         double tol = 1e-12);

}  // namespace bohrlab
