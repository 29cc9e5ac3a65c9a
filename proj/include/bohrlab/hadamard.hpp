#pragma once

// Hadamard convolution operators A_h^{m,l} f = z^l (h * f) acting on functions
// that vanish to order m, and the weighted majorant |A M_r f|.

#include <string>

#include "bohrlab/series.hpp"
#include "bohrlab/weights.hpp"

namespace bohrlab {

struct OperatorSpec {
  WeightSequence weights;  // c_n, the Taylor coefficients of h
  int m = 0;               // inputs vanish to order m
  int l = 0;               // shift exponent
  double prefactor = 1.0;  // e.g. m! for the m-th derivative

  OperatorSpec(WeightSequence w, int m_, int l_, double prefactor_ = 1.0);

  /// "deriv:m", "integrate", "identity[:m]" or "custom:<weights>,m,l,prefactor"
  /// with <weights> in WeightSequence::parse syntax.
  static OperatorSpec parse(const std::string& text);
  [[nodiscard]] std::string describe() const;
};

/// prefactor c_n a_n placed at index n + l.
PowerSeries convolve(const OperatorSpec& spec, const PowerSeries& f);

/// m! S_{m,-m}(z^m/(1-z)^{m+1} * f): c_n = binomial(n, m), l = -m.
OperatorSpec differentiation_spec(int m);

/// S_{0,1}(-log(1-z)/z * f): c_n = 1/(n+1), l = 1.
OperatorSpec integration_spec();

OperatorSpec identity_spec(int m = 0);

/// prefactor r^l sum_{n >= m} c_n |a_n| r^n.
Estimate operator_majorant(const OperatorSpec& spec, const PowerSeries& f, double r);

}  // namespace bohrlab
