#include "bohrlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kBoundaryTol = 1e-14;
constexpr double kConditionTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double binom_coeff(double k, int m) {
  if (k < m) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= m; ++i) v *= (k - m + i) / i;
  return v;
}

double rule_value(const WeightRule& rule, long k) {
  const auto kd = static_cast<double>(k);
  return std::visit(
      Overloaded{
          [](const weight_rule::Constant& r) { return r.value; },
          [kd](const weight_rule::Affine& r) { return r.alpha * kd + r.beta; },
          [kd](const weight_rule::Power& r) { return std::pow(kd, r.kappa); },
          [kd](const weight_rule::Binomial& r) { return binom_coeff(kd, r.m); },
          [kd](const weight_rule::Reciprocal& r) { return 1.0 / (kd + r.shift); },
          [k](const weight_rule::Explicit& r) {
            if (r.values.empty()) return 0.0;
            const auto idx = static_cast<std::size_t>(std::max<long>(k, 0));
            return idx < r.values.size() ? r.values[idx] : r.values.back();
          },
      },
      rule);
}

// sum_{n >= S} x^n and sum_{n >= S} n x^n
double geo_tail(double x, long S) { return std::pow(x, static_cast<double>(S)) / (1.0 - x); }
double lin_geo_tail(double x, long S) {
  const auto s = static_cast<double>(S);
  return std::pow(x, s) * (s - (s - 1.0) * x) / ((1.0 - x) * (1.0 - x));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ContractError("weights: cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw ContractError("weights: cannot parse number '" + s + "'");
  return v;
}

}  // namespace

WeightSequence::WeightSequence(WeightRule rule, int start_index, int ratio_from, RatioTrend trend,
                               double scale, int offset)
    : rule_(std::move(rule)),
      start_(start_index),
      ratio_from_(std::max(ratio_from, start_index)),
      trend_(trend),
      scale_(scale),
      offset_(offset) {
  validate();
}

void WeightSequence::validate() const {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) throw ContractError("weights: scale must be positive");
  for (std::size_t i = 0; i <= kCertificateWindow; ++i) {
    const long n = start_ + static_cast<long>(i);
    const double v = (*this)(n);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ContractError("weights: c_" + std::to_string(n) + " = " + std::to_string(v) +
                          " is not positive");
    }
  }
  for (std::size_t i = 0; i < kCertificateWindow; ++i) {
    const long n = ratio_from_ + static_cast<long>(i);
    const double a = ratio(n);
    const double b = ratio(n + 1);
    const bool ok = trend_ == RatioTrend::NonDecreasing ? a <= b * (1.0 + kConditionTol)
                                                        : a * (1.0 + kConditionTol) >= b;
    if (!ok) {
      throw ContractError("weights: ratio certificate fails at n = " + std::to_string(n) + " for " +
                          describe());
    }
  }
}

WeightSequence WeightSequence::identity(int start) {
  return WeightSequence(weight_rule::Affine{1.0, 0.0}, std::max(start, 1), std::max(start, 1));
}
WeightSequence WeightSequence::constant(double value, int start) {
  return WeightSequence(weight_rule::Constant{value}, start, start);
}
WeightSequence WeightSequence::affine(double alpha, double beta, int start) {
  if (alpha < 0.0) throw ContractError("weights: affine slope must be >= 0");
  return WeightSequence(weight_rule::Affine{alpha, beta}, start, start);
}
WeightSequence WeightSequence::power(double kappa, int start) {
  return WeightSequence(weight_rule::Power{kappa}, std::max(start, 1), std::max(start, 1),
                        kappa >= 0.0 ? RatioTrend::NonDecreasing : RatioTrend::NonIncreasing);
}
WeightSequence WeightSequence::binomial(int m) {
  if (m < 0) throw ContractError("weights: binomial order must be >= 0");
  return WeightSequence(weight_rule::Binomial{m}, m, m);
}
WeightSequence WeightSequence::reciprocal(double shift, int start) {
  return WeightSequence(weight_rule::Reciprocal{shift}, start, start, RatioTrend::NonIncreasing);
}
WeightSequence WeightSequence::explicit_list(std::vector<double> values, int start, int ratio_from) {
  if (values.empty()) throw ContractError("weights: explicit list is empty");
  if (start < 0) throw ContractError("weights: start index must be >= 0");
  std::vector<double> padded(static_cast<std::size_t>(start), values.front());
  padded.insert(padded.end(), values.begin(), values.end());
  return WeightSequence(weight_rule::Explicit{std::move(padded)}, start, ratio_from);
}

WeightSequence WeightSequence::parse(const std::string& text) {
  if (text == "n") return identity(1);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ContractError("weights: unknown spec '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "const") return constant(parse_double(rest), 0);
  if (kind == "affine") {
    const auto parts = split(rest, ',');
    if (parts.size() != 2) throw ContractError("weights: affine needs 'affine:m,p'");
    const double alpha = parse_double(parts[0]);
    const double beta = parse_double(parts[1]);
    return affine(alpha, beta, beta > 0.0 ? 0 : 1);
  }
  if (kind == "power") return power(parse_double(rest), 1);
  if (kind == "binom") return binomial(static_cast<int>(parse_double(rest)));
  if (kind == "recip") return reciprocal(parse_double(rest), 0);
  if (kind == "list") {
    const auto fields = split(rest, ';');
    if (fields.empty() || fields[0].size() < 2 || fields[0].front() != '[' || fields[0].back() != ']') {
      throw ContractError("weights: list needs 'list:[v0,v1,...];ratio_from=k'");
    }
    std::vector<double> values;
    for (const auto& v : split(fields[0].substr(1, fields[0].size() - 2), ',')) {
      values.push_back(parse_double(v));
    }
    int ratio_from = -1;
    int start = 1;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos) throw ContractError("weights: bad list option '" + fields[i] + "'");
      const auto key = fields[i].substr(0, eq);
      const auto val = static_cast<int>(parse_double(fields[i].substr(eq + 1)));
      if (key == "ratio_from") ratio_from = val;
      else if (key == "start") start = val;
      else throw ContractError("weights: bad list option '" + key + "'");
    }
    if (ratio_from < 0) ratio_from = start + static_cast<int>(values.size());
    return explicit_list(std::move(values), start, ratio_from);
  }
  throw ContractError("weights: unknown spec '" + text + "'");
}

double WeightSequence::operator()(long n) const { return scale_ * rule_value(rule_, n + offset_); }

double WeightSequence::ratio_limit() const {
  // Every registered rule has c_n / c_{n+1} -> 1.
  return 1.0;
}

std::optional<double> WeightSequence::closed_form_sum(double x) const {
  if (x == 0.0) return start_ == 0 ? (*this)(0) : 0.0;
  if (!(std::abs(x) < 1.0)) return std::nullopt;
  const long S = start_;
  const auto o = static_cast<double>(offset_);
  return std::visit(
      Overloaded{
          [&](const weight_rule::Constant& r) -> std::optional<double> {
            return scale_ * r.value * geo_tail(x, S);
          },
          [&](const weight_rule::Affine& r) -> std::optional<double> {
            return scale_ * (r.alpha * lin_geo_tail(x, S) + (r.alpha * o + r.beta) * geo_tail(x, S));
          },
          [&](const weight_rule::Power& r) -> std::optional<double> {
            if (r.kappa == 0.0) return scale_ * geo_tail(x, S);
            if (r.kappa == 1.0) return scale_ * (lin_geo_tail(x, S) + o * geo_tail(x, S));
            return std::nullopt;
          },
          [&](const weight_rule::Binomial& r) -> std::optional<double> {
            // sum_{k>=0} C(k,m) x^k = x^m / (1-x)^{m+1}; subtract the head below S + offset.
            const long K = S + offset_;
            double full = std::pow(x, r.m) / std::pow(1.0 - x, r.m + 1);
            double head = 0.0;
            for (long k = 0; k < K; ++k) head += binom_coeff(static_cast<double>(k), r.m) * std::pow(x, static_cast<double>(k));
            if (head > 0.5 * full) return std::nullopt;
            return scale_ * std::pow(x, -o) * (full - head);
          },
          [&](const weight_rule::Reciprocal& r) -> std::optional<double> {
            // sum_{n>=0} x^n / (n+1) = -log(1-x)/x, valid when offset + shift == 1.
            if (o + r.shift != 1.0) return std::nullopt;
            const double full = -std::log1p(-x) / x;
            double head = 0.0;
            for (long n = 0; n < S; ++n) head += std::pow(x, static_cast<double>(n)) / static_cast<double>(n + 1);
            if (head > 0.5 * full) return std::nullopt;
            return scale_ * (full - head);
          },
          [](const weight_rule::Explicit&) -> std::optional<double> { return std::nullopt; },
      },
      rule_);
}

WeightSequence WeightSequence::shifted(int shift) const {
  return WeightSequence(rule_, start_ - shift, ratio_from_ - shift, trend_, scale_, offset_ + shift);
}

WeightSequence WeightSequence::scaled(double factor) const {
  return WeightSequence(rule_, start_, ratio_from_, trend_, scale_ * factor, offset_);
}

std::string WeightSequence::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const weight_rule::Constant& r) { os << "const:" << r.value; },
                 [&](const weight_rule::Affine& r) {
                   if (r.alpha == 1.0 && r.beta == 0.0) os << "n";
                   else os << "affine:" << r.alpha << ',' << r.beta;
                 },
                 [&](const weight_rule::Power& r) { os << "power:" << r.kappa; },
                 [&](const weight_rule::Binomial& r) { os << "binom:" << r.m; },
                 [&](const weight_rule::Reciprocal& r) { os << "recip:" << r.shift; },
                 [&](const weight_rule::Explicit& r) { os << "list[" << r.values.size() << "]"; },
             },
             rule_);
  if (offset_ != 0) os << " shifted by " << offset_;
  if (scale_ != 1.0) os << " scaled by " << scale_;
  return os.str();
}

// ---------------------------------------------------------------------------

bool BoundReport::all_ok() const {
  return std::all_of(conditions_ok.begin(), conditions_ok.end(), [](const auto& kv) { return kv.second; });
}

double tail_ratio_inf(const WeightSequence& c, int k) {
  if (k < c.start_index()) {
    throw ContractError("tail_ratio_inf: index " + std::to_string(k) + " below start index " +
                        std::to_string(c.start_index()));
  }
  const int from = c.monotone_ratio_from();
  const double certified = c.trend() == RatioTrend::NonDecreasing ? c.ratio(std::max(k, from))
                                                                  : c.ratio_limit();
  double inf = certified;
  for (int n = k; n < from; ++n) inf = std::min(inf, c.ratio(n));
  return inf;
}

int interval_index(const WeightSequence& c, double r) {
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("interval_index: r must lie in [0, 1)");
  if (c.start_index() > 1) throw ContractError("interval_index: weights must be defined from n = 1");
  const double x = r * r;
  auto fits = [&](long s) { return x <= tail_ratio_inf(c, static_cast<int>(s)) * (1.0 + kBoundaryTol); };
  if (fits(1)) return 1;
  if (x > c.ratio_limit()) throw DomainError("interval_index: r^2 exceeds every tail ratio infimum");
  long lo = 1;
  long hi = 2;
  while (!fits(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (1L << 30)) throw DomainError("interval_index: no window found below 2^30");
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (fits(mid) ? hi : lo) = mid;
  }
  return static_cast<int>(hi);
}

bool check_condition_1(const WeightSequence& c, double r, int s) {
  if (s < 2) return true;
  const double c1 = c(1);
  const double x = r * r;
  auto d = [&](long n) { return c(n) / c1; };
  // Monotone ratios from 2 and r^2 >= 1/c_2 make c_n r^{2n} increasing up to s.
  if (c.trend() == RatioTrend::NonDecreasing && c.monotone_ratio_from() <= 2 &&
      x >= (1.0 / d(2)) * (1.0 - kConditionTol) &&
      x >= tail_ratio_inf(c, s - 1) * (1.0 - kConditionTol)) {
    return true;
  }
  const double top = d(s) * std::pow(x, s);
  for (int n = 1; n < s; ++n) {
    const double v = d(n) * std::pow(x, n);
    if (x > v * (1.0 + kConditionTol) || v > top * (1.0 + kConditionTol)) return false;
  }
  return true;
}

std::pair<WeightSequence, double> normalize(const WeightSequence& c) {
  if (c.start_index() > 1) throw ContractError("normalize: weights must be defined at n = 1");
  const double c1 = c(1);
  return {c.scaled(1.0 / c1), c1};
}

double weighted_sum(const WeightSequence& c, double x, int from) {
  if (from < c.start_index()) throw ContractError("weighted_sum: index below start index");
  if (!(x >= 0.0)) throw DomainError("weighted_sum: x must be >= 0");
  if (x == 0.0) return from == 0 ? c(0) : 0.0;
  if (!(x < c.ratio_limit())) throw DomainError("weighted_sum: x outside the radius of convergence");
  if (const auto full = c.closed_form_sum(x)) {
    double head = 0.0;
    double xn = std::pow(x, c.start_index());
    for (long n = c.start_index(); n < from; ++n, xn *= x) head += c(n) * xn;
    // Fall back to direct summation when subtracting the head would cancel.
    if (head <= 0.5 * *full) return *full - head;
  }
  double sum = 0.0;
  double xn = std::pow(x, from);
  for (long n = from;; ++n) {
    sum += c(n) * xn;
    xn *= x;
    if (n + 1 >= c.monotone_ratio_from()) {
      // Terms beyond n are dominated by a geometric series of ratio rho.
      const double rho = x / tail_ratio_inf(c, static_cast<int>(n + 1));
      if (rho < 1.0 && c(n + 1) * xn / (1.0 - rho) <= 1e-17 * sum) break;
    }
    if (n - from > 50'000'000) throw DomainError("weighted_sum: series converges too slowly");
  }
  return sum;
}

}  // namespace bohrlab
