#pragma once

// Positive weight sequences c_n given by a rule, with a certificate on the
// behaviour of the ratio c_n / c_{n+1} that makes tail infima exact.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bohrlab {

namespace weight_rule {
struct Constant {
  double value = 1.0;
};
/// c_n = alpha n + beta
struct Affine {
  double alpha = 1.0;
  double beta = 0.0;
};
/// c_n = n^kappa
struct Power {
  double kappa = 1.0;
};
/// c_n = binomial(n, m), the coefficients of z^m / (1 - z)^{m+1}
struct Binomial {
  int m = 1;
};
/// c_n = 1 / (n + shift)
struct Reciprocal {
  double shift = 1.0;
};
/// values[k] is the rule value at index k; beyond the list the last value repeats.
struct Explicit {
  std::vector<double> values;
};
}  // namespace weight_rule

using WeightRule = std::variant<weight_rule::Constant, weight_rule::Affine, weight_rule::Power,
                                weight_rule::Binomial, weight_rule::Reciprocal,
                                weight_rule::Explicit>;

/// Direction in which c_n / c_{n+1} moves once n >= ratio_from.
enum class RatioTrend {
  NonDecreasing,  // tail infimum attained at the first index
  NonIncreasing,  // tail infimum is the limit of the ratio
};

/// c_n = scale * rule(n + offset) for n >= start_index.
///
/// Construction validates positivity and the ratio certificate on a window of
/// kCertificateWindow indices; beyond the window the certificate is trusted.
class WeightSequence {
 public:
  static constexpr std::size_t kCertificateWindow = 10000;

  WeightSequence(WeightRule rule, int start_index, int ratio_from,
                 RatioTrend trend = RatioTrend::NonDecreasing, double scale = 1.0, int offset = 0);

  static WeightSequence identity(int start = 1);  // c_n = n
  static WeightSequence constant(double value = 1.0, int start = 0);
  static WeightSequence affine(double alpha, double beta, int start = 1);
  static WeightSequence power(double kappa, int start = 1);
  static WeightSequence binomial(int m);
  static WeightSequence reciprocal(double shift = 1.0, int start = 0);
  static WeightSequence explicit_list(std::vector<double> values, int start, int ratio_from);

  /// Parses "n", "const:1", "affine:m,p" (c_n = m n + p), "power:k",
  /// "binom:m", "recip:s", "list:[v0,v1,...];ratio_from=k[;start=j]".
  static WeightSequence parse(const std::string& text);

  [[nodiscard]] double operator()(long n) const;
  [[nodiscard]] int start_index() const { return start_; }
  [[nodiscard]] int monotone_ratio_from() const { return ratio_from_; }
  [[nodiscard]] RatioTrend trend() const { return trend_; }
  [[nodiscard]] double ratio(long n) const { return (*this)(n) / (*this)(n + 1); }

  /// lim c_n / c_{n+1}; the radius of convergence of sum c_n z^n.
  [[nodiscard]] double ratio_limit() const;

  /// Closed form of sum_{n >= start} c_n x^n when one is registered.
  [[nodiscard]] std::optional<double> closed_form_sum(double x) const;

  /// Same sequence viewed as d_n = c_{n + shift} for n >= start - shift.
  [[nodiscard]] WeightSequence shifted(int shift) const;
  [[nodiscard]] WeightSequence scaled(double factor) const;

  [[nodiscard]] std::string describe() const;

 private:
  void validate() const;

  WeightRule rule_;
  int start_;
  int ratio_from_;
  RatioTrend trend_;
  double scale_;
  int offset_;
};

/// Validity-window report shared by the bound evaluators.
struct BoundReport {
  int s = 0;
  std::pair<double, double> r_window{0.0, 0.0};
  std::optional<double> value;
  std::map<std::string, bool> conditions_ok;
  std::string notes;

  [[nodiscard]] bool all_ok() const;
};

/// inf_{n >= k} c_n / c_{n+1}, exact under the ratio certificate.
double tail_ratio_inf(const WeightSequence& c, int k);

/// Smallest s >= 1 with inf_{n>=s-1} c_n/c_{n+1} <= r^2 <= inf_{n>=s} c_n/c_{n+1}.
/// The s = 1 window starts at 0. Ties at a boundary resolve to the smaller s.
int interval_index(const WeightSequence& c, double r);

/// r^2 <= c_n r^{2n} <= c_s r^{2s} for 1 <= n < s, evaluated on c / c_1.
bool check_condition_1(const WeightSequence& c, double r, int s);

/// Returns (c / c_1, c_1).
std::pair<WeightSequence, double> normalize(const WeightSequence& c);

/// sum_{n >= from} c_n x^n. Uses the registered closed form when there is one
/// and otherwise sums until the ratio-certified tail is below 1e-17 relative.
double weighted_sum(const WeightSequence& c, double x, int from);

}  // namespace bohrlab
