#pragma once

#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

/// Bisection for a sign change of f on [lo, hi]; stops when the bracket is
/// shorter than tol. Endpoint roots are returned as-is.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-12) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Largest x in [lo, hi] with pred(x) true, given pred(lo) and pred monotone
/// (true then false).
template <class P>
double bisect_predicate(P&& pred, double lo, double hi, double tol = 1e-12) {
  if (pred(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace bohrlab
