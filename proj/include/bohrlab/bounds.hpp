#pragma once

// Closed-form estimates: the subordination ratio G(r), sharp area bounds for
// lacunary series, the area analogue of the Bohr radius, and the majorant
// bounds for Hadamard convolution operators with a fixed initial coefficient.

#include <map>
#include <string>
#include <utility>

#include "bohrlab/series.hpp"
#include "bohrlab/weights.hpp"

namespace bohrlab {

/// sup over f < g of sum c_n|a_n|^2 r^{2n} / sum c_n|b_n|^2 r^{2n} (n >= 1).
/// Weights are normalised to c_1 = 1 internally. r_window is in terms of r.
BoundReport g_ratio_bound(const WeightSequence& c, double r);

struct AreaBound {
  int m = 1;
  int p = 0;
  int s = 0;
  std::pair<double, double> r_window{0.0, 0.0};  // interval for r^{2m}
  int bound_coeff = 0;                           // m s + p
  int exponent = 0;                              // 2 (m s + p)

  /// pi (ms+p) r^{2(ms+p)} ||f||_inf^2
  [[nodiscard]] double value(double r, double sup_norm = 1.0) const;
};

/// Window s >= 0 containing r^{2m}:
///   [(m(s-1)+p)/(ms+p), (ms+p)/(m(s+1)+p)], left end clamped at 0.
AreaBound area_bound(const LacunarySpec& spec, double r);

struct AreaBohrConstants {
  double y = 0.0;             // root in (1, inf) of x^{-1/(2x)} = sqrt(x/(x+1))
  double residual = 0.0;      // |g(y) - h(y)|
  double radius = 0.0;        // largest R with S_r f <= pi ||f||^2 for r <= R
  int critical_window = 0;    // first s with s^{-1/(2s)} < sqrt(s/(s+1))
};

/// Evaluates the window-by-window comparison of s^{-1/(2s)} with sqrt(s/(s+1)).
AreaBohrConstants corollary3_constants();

enum class MajorantKind { ExactD, TwoSided3 };

struct MajorantBound {
  MajorantKind kind = MajorantKind::ExactD;
  double lower = 0.0;
  double upper = 0.0;
  int s = 0;
  std::map<std::string, bool> conditions_ok;

  [[nodiscard]] bool all_ok() const;
};

/// Weighted majorant of the Mobius extremal z^m (z + a)/(1 + a z):
///   r^{m+l} c_m a + (1/a - a) a^{-m} r^l (h(ar) - c_m (ar)^m).
/// Exact Bohr-Bombieri value when r/a <= inf_{n>=m+1} c_n/c_{n+1} and a > r.
MajorantBound theorem_D_exact(const WeightSequence& c, int m, int l, double r, double a);

/// Two-sided estimate beyond the exact regime; the upper bound multiplies the
/// tail term by sqrt(c_{m+s}/c_{m+1} (r/a)^{s-1}).
MajorantBound theorem_3_bounds(const WeightSequence& c, int m, int l, int s, double r, double a);

/// The s whose cond1 window inf_{n>=s+m-1} <= r/a <= inf_{n>=s+m} contains r/a.
int theorem_3_index(const WeightSequence& c, int m, double r, double a);

struct RadiusWithCondition {
  double radius = 0.0;
  bool condition_ok = false;
};

/// r_m(a) = (1/a)(1 - ((1+a)/(1+2a))^{1/(m+1)}), exact when
/// (1 - 2a^2/(m+2))^{m+1} <= (1+a)/(1+2a).
RadiusWithCondition theorem_E_radius(int m, double a);

/// m_{id_0}(r): 1 on [0, 1/3], (3 - sqrt(8(1-r^2)))/r on [1/3, 1/sqrt 2].
double bombieri_function(double r);

/// R_{id_0}(a) = 1/(1+2a) for 1/2 < a <= 1.
double bombieri_radius(double a);

/// 1 - sqrt((1+a)/(2+a)), from the coefficient estimate |a_n| <= 1 - a^2.
double old_lower_bound(double a);

/// (1/a)(1 - sqrt((1+a)/(1+2a))), from the Mobius functions.
double upper_bound(double a);

/// a + (1/(1-r)^2 - 1)(1 - a^2), the bound on M_r f' used by old_lower_bound.
double old_derivative_majorant(double r, double a);

}  // namespace bohrlab
