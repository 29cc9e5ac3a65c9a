#pragma once

// Truncated Taylor series of analytic functions on the unit disk, the
// coefficient functionals used throughout the library, and generators for
// functions whose sup-norm on the disk is known by construction.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultDegree = 256;

/// Certificate |a_n| <= B q^n for every n beyond the stored truncation.
struct TailBound {
  double B = 0.0;
  double q = 0.0;

  friend bool operator==(const TailBound&, const TailBound&) = default;
};

/// A functional value together with the certified contribution of the
/// unstored tail, when the series carries a tail bound.
struct Estimate {
  double value = 0.0;
  std::optional<double> tail_error;
};

class PowerSeries {
 public:
  PowerSeries() : coeffs_{Complex{}} {}

  /// Vanish order is inferred as the index of the first nonzero coefficient.
  explicit PowerSeries(std::vector<Complex> coeffs,
                       std::optional<TailBound> tail = std::nullopt);

  /// Explicit vanish order; coeffs[k] must be exactly zero for k < order.
  PowerSeries(std::vector<Complex> coeffs, std::size_t vanish_order,
              std::optional<TailBound> tail);

  static PowerSeries monomial(std::size_t k, Complex c = 1.0, std::size_t degree = 0);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::size_t vanish_order() const { return vanish_order_; }
  [[nodiscard]] const std::optional<TailBound>& tail() const { return tail_; }
  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] Complex operator[](std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  /// Truncate or zero-pad to the given degree. Padding a tailed series drops
  /// the tail certificate since the padded zeros would contradict it.
  [[nodiscard]] PowerSeries resized(std::size_t degree) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
  std::size_t vanish_order_ = 0;
  std::optional<TailBound> tail_;
};

struct LacunarySpec {
  int m = 1;
  int p = 0;

  LacunarySpec() = default;
  LacunarySpec(int m_, int p_);
};

/// Schur-algorithm parameters; gamma[0] is the value at the origin.
struct SchurParams {
  std::vector<Complex> gamma;

  SchurParams() = default;
  explicit SchurParams(std::vector<Complex> g);
};

// ---- truncated series arithmetic ----------------------------------------
namespace series_ops {

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b,
                              std::size_t degree);

/// Long division num/den truncated to `degree`; den[0] must be nonzero.
/// Cost is O(degree * nnz-length(den)).
std::vector<Complex> divide(std::span<const Complex> num, std::span<const Complex> den,
                            std::size_t degree);

/// Coefficients of (alpha w + beta) / (gamma w + delta) composed with w = u(z).
std::vector<Complex> mobius_compose(std::span<const Complex> u, Complex alpha,
                                    Complex beta, Complex gamma, Complex delta,
                                    std::size_t degree);

/// Horner evaluation without the domain check.
Complex horner(std::span<const Complex> c, Complex z);

}  // namespace series_ops

// ---- evaluation and functionals -----------------------------------------

Complex eval(const PowerSeries& f, Complex z);

/// M_r f = sum |a_n| r^n.
Estimate majorant_series(const PowerSeries& f, double r);

/// S_r f = pi sum n |a_n|^2 r^{2n}, the area of f(rD) with multiplicity.
Estimate area_functional(const PowerSeries& f, double r);

/// ||f(r.)||_2^2 = sum |a_n|^2 r^{2n}.
Estimate l2_norm_sq(const PowerSeries& f, double r);

/// Lower estimate of sup |f| over the closed disk from |z| = 1: grid maximum
/// followed by a golden-section refinement. The returned value is attained
/// by the stored truncation, minus the certified tail if any; with a tail it
/// is never below the H^2 norm of the stored coefficients.
double sup_norm_estimate(const PowerSeries& f, int resolution = 1024);

// ---- generators ----------------------------------------------------------

/// (z + a) / (1 + a z), 0 <= a < 1.
PowerSeries mobius_series(double a, std::size_t degree = kDefaultDegree);

/// Finite Schur continued fraction
///   f_k(z) = (gamma_k + z f_{k+1}(z)) / (1 + conj(gamma_k) z f_{k+1}(z)),
///   f_d    = gamma_d.
/// Orientation: gamma = [0, 1] gives f(z) = z, gamma = [a, 1] gives
/// (a + z)/(1 + conj(a) z). ||f||_inf <= 1, with equality iff |gamma_d| = 1.
PowerSeries schur_series(const SchurParams& params, std::size_t degree = kDefaultDegree);

/// e^{i phase} prod (z - z_k)/(1 - conj(z_k) z); unit modulus on |z| = 1.
/// Carries a Cauchy-estimate tail certificate.
PowerSeries blaschke_series(std::span<const Complex> zeros, double phase,
                            std::size_t degree = kDefaultDegree);

/// f = g o omega truncated to `degree`; omega(0) must vanish. Coefficients up
/// to `degree` are exact given g and omega up to `degree`.
PowerSeries subordinate_pair(const PowerSeries& g, const PowerSeries& omega,
                             std::size_t degree = kDefaultDegree);

/// Places inner's coefficient n at index m n + p.
PowerSeries lacunary_series(const LacunarySpec& spec, const PowerSeries& inner,
                            std::size_t degree = kDefaultDegree);

}  // namespace bohrlab
