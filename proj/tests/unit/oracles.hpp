#pragma once

// Independent reference computations used only by the tests: direct
// quadrature and brute-force sums that share no code with the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline C poly(const std::vector<C>& c, C z) {
  C acc = 0.0, zn = 1.0;
  for (const C& a : c) {
    acc += a * zn;
    zn *= z;
  }
  return acc;
}

inline C poly_derivative(const std::vector<C>& c, C z) {
  C acc = 0.0, zn = 1.0;
  for (std::size_t n = 1; n < c.size(); ++n) {
    acc += static_cast<double>(n) * c[n] * zn;
    zn *= z;
  }
  return acc;
}

/// (1/2pi) int |f(r e^{it})|^2 dt by the trapezoid rule.
inline double circle_mean_sq(const std::function<C(C)>& f, double r, int nodes = 4096) {
  double acc = 0.0;
  for (int k = 0; k < nodes; ++k) acc += std::norm(f(std::polar(r, 2.0 * std::numbers::pi * k / nodes)));
  return acc / nodes;
}

/// int_{|z|<r} |f'(z)|^2 dA with Simpson in the radius and trapezoid in angle.
inline double disk_integral_sq(const std::function<C(C)>& df, double r, int radial = 800, int nodes = 512) {
  auto ring = [&](double rho) { return 2.0 * std::numbers::pi * rho * circle_mean_sq(df, rho, nodes); };
  const double h = r / radial;
  double acc = ring(0.0) + ring(r);
  for (int i = 1; i < radial; ++i) acc += (i % 2 ? 4.0 : 2.0) * ring(i * h);
  return acc * h / 3.0;
}

/// Composite Simpson on [lo, hi].
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int panels = 2000) {
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

}  // namespace oracle
