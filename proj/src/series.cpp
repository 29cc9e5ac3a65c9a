#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

void require_radius(double r, const char* op) {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw DomainError(std::string(op) + ": radius must lie in [0, 1), got " + std::to_string(r));
  }
}

std::size_t first_nonzero(const std::vector<Complex>& c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != Complex{}) return k;
  }
  return c.size();
}

// sum_{n > N} n x^n for 0 <= x < 1.
double weighted_geometric_tail(double x, std::size_t N) {
  const double n1 = static_cast<double>(N + 1);
  return std::pow(x, n1) * (n1 - static_cast<double>(N) * x) / ((1.0 - x) * (1.0 - x));
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs, std::optional<TailBound> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
  vanish_order_ = first_nonzero(coeffs_);
  if (tail_ && !(tail_->B >= 0.0 && tail_->q >= 0.0 && tail_->q < 1.0)) {
    throw ContractError("PowerSeries: tail bound needs B >= 0 and 0 <= q < 1");
  }
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, std::size_t vanish_order,
                         std::optional<TailBound> tail)
    : PowerSeries(std::move(coeffs), tail) {
  if (vanish_order > vanish_order_ && vanish_order_ < coeffs_.size()) {
    throw ContractError("PowerSeries: coefficient " + std::to_string(vanish_order_) +
                        " is nonzero below the declared vanish order " +
                        std::to_string(vanish_order));
  }
  vanish_order_ = vanish_order;
}

PowerSeries PowerSeries::monomial(std::size_t k, Complex c, std::size_t degree) {
  std::vector<Complex> coeffs(std::max(k, degree) + 1);
  coeffs[k] = c;
  return PowerSeries(std::move(coeffs), TailBound{0.0, 0.0});
}

PowerSeries PowerSeries::resized(std::size_t degree) const {
  std::vector<Complex> c(coeffs_.begin(),
                         coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(degree + 1, coeffs_.size())));
  std::optional<TailBound> tail;
  if (degree <= this->degree()) {
    tail = tail_;
    if (tail) {
      // Dropped coefficients must still respect the certificate.
      double needed = tail->B;
      for (std::size_t n = degree + 1; n < coeffs_.size(); ++n) {
        const double qn = std::pow(tail->q, static_cast<double>(n));
        if (qn > 0.0) needed = std::max(needed, std::abs(coeffs_[n]) / qn);
        else if (coeffs_[n] != Complex{}) needed = std::numeric_limits<double>::infinity();
      }
      if (std::isfinite(needed)) tail->B = needed;
      else tail.reset();
    }
  } else if (tail_ && tail_->B == 0.0) {
    tail = tail_;  // padding with zeros is exact for a polynomial
  }
  c.resize(degree + 1);
  return PowerSeries(std::move(c), tail);
}

LacunarySpec::LacunarySpec(int m_, int p_) : m(m_), p(p_) {
  if (m < 1 || p < 0 || p > m) {
    throw ContractError("LacunarySpec: need m >= 1 and 0 <= p <= m");
  }
}

SchurParams::SchurParams(std::vector<Complex> g) : gamma(std::move(g)) {
  if (gamma.empty()) throw ContractError("SchurParams: at least one parameter required");
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
    if (!(std::abs(gamma[i]) < 1.0)) {
      throw ContractError("SchurParams: |gamma[" + std::to_string(i) + "]| must be < 1");
    }
  }
  // unimodular values built with std::polar can round to just above 1
  if (!(std::abs(gamma.back()) <= 1.0 + 1e-15)) {
    throw ContractError("SchurParams: last parameter must satisfy |gamma| <= 1");
  }
}

// ---------------------------------------------------------------------------

namespace series_ops {

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b,
                              std::size_t degree) {
  std::vector<Complex> out(degree + 1);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == Complex{}) continue;
    const std::size_t jmax = std::min(b.size(), degree - i + 1);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Complex> divide(std::span<const Complex> num, std::span<const Complex> den,
                            std::size_t degree) {
  if (den.empty() || den[0] == Complex{}) {
    throw ContractError("series division: denominator has zero constant term");
  }
  std::size_t den_len = den.size();
  while (den_len > 1 && den[den_len - 1] == Complex{}) --den_len;
  const Complex inv0 = 1.0 / den[0];
  std::vector<Complex> q(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    Complex acc = n < num.size() ? num[n] : Complex{};
    const std::size_t kmax = std::min(n, den_len - 1);
    for (std::size_t k = 1; k <= kmax; ++k) acc -= den[k] * q[n - k];
    q[n] = acc * inv0;
  }
  return q;
}

std::vector<Complex> mobius_compose(std::span<const Complex> u, Complex alpha, Complex beta,
                                    Complex gamma, Complex delta, std::size_t degree) {
  std::vector<Complex> num(degree + 1), den(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    const Complex un = n < u.size() ? u[n] : Complex{};
    num[n] = alpha * un;
    den[n] = gamma * un;
  }
  num[0] += beta;
  den[0] += delta;
  return divide(num, den, degree);
}

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc{};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

}  // namespace series_ops

// ---------------------------------------------------------------------------

Complex eval(const PowerSeries& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("eval: |z| must be < 1");
  return series_ops::horner(f.coeffs(), z);
}

Estimate majorant_series(const PowerSeries& f, double r) {
  require_radius(r, "majorant_series");
  Estimate e;
  double rn = 1.0;
  for (const Complex& a : f.coeffs()) {
    e.value += std::abs(a) * rn;
    rn *= r;
  }
  if (const auto& t = f.tail()) {
    const double x = t->q * r;
    e.tail_error = t->B * std::pow(x, static_cast<double>(f.degree() + 1)) / (1.0 - x);
  }
  return e;
}

Estimate area_functional(const PowerSeries& f, double r) {
  require_radius(r, "area_functional");
  Estimate e;
  const double r2 = r * r;
  double r2n = r2;
  const auto c = f.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n) {
    e.value += static_cast<double>(n) * std::norm(c[n]) * r2n;
    r2n *= r2;
  }
  e.value *= std::numbers::pi;
  if (const auto& t = f.tail()) {
    const double x = t->q * t->q * r2;
    e.tail_error = std::numbers::pi * t->B * t->B * weighted_geometric_tail(x, f.degree());
  }
  return e;
}

Estimate l2_norm_sq(const PowerSeries& f, double r) {
  require_radius(r, "l2_norm_sq");
  Estimate e;
  const double r2 = r * r;
  double r2n = 1.0;
  for (const Complex& a : f.coeffs()) {
    e.value += std::norm(a) * r2n;
    r2n *= r2;
  }
  if (const auto& t = f.tail()) {
    const double x = t->q * t->q * r2;
    e.tail_error = t->B * t->B * std::pow(x, static_cast<double>(f.degree() + 1)) / (1.0 - x);
  }
  return e;
}

double sup_norm_estimate(const PowerSeries& f, int resolution) {
  if (resolution < 64) throw ContractError("sup_norm_estimate: resolution must be >= 64");
  const auto c = f.coeffs();
  auto modulus = [&](double theta) {
    return std::abs(series_ops::horner(c, std::polar(1.0, theta)));
  };
  const double step = 2.0 * std::numbers::pi / resolution;
  int best_i = 0;
  double best = -1.0;
  for (int i = 0; i < resolution; ++i) {
    const double v = modulus(step * i);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Golden-section maximisation on the bracket around the grid maximum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = step * (best_i - 1);
  double hi = step * (best_i + 1);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = modulus(x1);
  double f2 = modulus(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = modulus(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = modulus(x1);
    }
  }
  best = std::max({best, f1, f2});
  if (const auto& t = f.tail()) {
    best -= t->B * std::pow(t->q, static_cast<double>(f.degree() + 1)) / (1.0 - t->q);
    // the H^2 norm of the stored part never exceeds ||f||_inf
    double h2 = 0.0;
    for (const Complex& a : c) h2 += std::norm(a);
    best = std::max(best, std::sqrt(h2));
  }
  return best;
}

// ---------------------------------------------------------------------------

PowerSeries mobius_series(double a, std::size_t degree) {
  if (!(a >= 0.0) || !(a < 1.0)) throw DomainError("mobius_series: a must lie in [0, 1)");
  std::vector<Complex> c(std::max<std::size_t>(degree, 1) + 1);
  c[0] = a;
  double coef = 1.0 - a * a;
  for (std::size_t n = 1; n < c.size(); ++n) {
    c[n] = coef;
    coef *= -a;
  }
  const TailBound tail = a > 0.0 ? TailBound{(1.0 - a * a) / a, a} : TailBound{0.0, 0.0};
  return PowerSeries(std::move(c), tail);
}

PowerSeries schur_series(const SchurParams& params, std::size_t degree) {
  SchurParams checked(params.gamma);
  // Carry f_k = P/Q as polynomials of degree <= d - k; Q(0) = 1 at every level.
  std::vector<Complex> P{checked.gamma.back()};
  std::vector<Complex> Q{1.0};
  for (std::size_t k = checked.gamma.size() - 1; k-- > 0;) {
    const Complex g = checked.gamma[k];
    const std::size_t len = std::max(P.size() + 1, Q.size());
    std::vector<Complex> nP(len), nQ(len);
    for (std::size_t i = 0; i < Q.size(); ++i) {
      nP[i] += g * Q[i];
      nQ[i] += Q[i];
    }
    for (std::size_t i = 0; i < P.size(); ++i) {
      nP[i + 1] += P[i];
      nQ[i + 1] += std::conj(g) * P[i];
    }
    P = std::move(nP);
    Q = std::move(nQ);
  }
  auto coeffs = series_ops::divide(P, Q, degree);
  if (Q.size() == 1) return PowerSeries(std::move(coeffs), TailBound{0.0, 0.0});
  return PowerSeries(std::move(coeffs));
}

PowerSeries blaschke_series(std::span<const Complex> zeros, double phase, std::size_t degree) {
  double rho_max = 0.0;
  for (const Complex& zk : zeros) {
    if (!(std::abs(zk) < 1.0)) throw ContractError("blaschke_series: zeros must satisfy |z_k| < 1");
    rho_max = std::max(rho_max, std::abs(zk));
  }
  std::vector<Complex> c(degree + 1);
  c[0] = std::polar(1.0, phase);
  for (const Complex& zk : zeros) {
    // multiply by (z - zk), then divide by (1 - conj(zk) z) via y_n = x_n + conj(zk) y_{n-1}
    for (std::size_t n = degree; n > 0; --n) c[n] = c[n - 1] - zk * c[n];
    c[0] = -zk * c[0];
    const Complex w = std::conj(zk);
    for (std::size_t n = 1; n <= degree; ++n) c[n] += w * c[n - 1];
  }
  if (rho_max == 0.0) {
    return PowerSeries(std::move(c), zeros.size() <= degree ? std::optional(TailBound{0.0, 0.0})
                                                             : std::nullopt);
  }
  // Cauchy estimate on |z| = R < 1/rho_max: |a_n| <= M(R) R^{-n} with
  // M(R) = prod (R + |z_k|)/(1 - |z_k| R). Pick R minimising the tail mass.
  const double R_hi = 1.0 / rho_max;
  double best_log = std::numeric_limits<double>::infinity();
  TailBound best{};
  for (int i = 1; i < 400; ++i) {
    const double R = 1.0 + (R_hi - 1.0) * i / 400.0;
    double logM = 0.0;
    for (const Complex& zk : zeros) {
      const double rk = std::abs(zk);
      logM += std::log(R + rk) - std::log(1.0 - rk * R);
    }
    const double q = 1.0 / R;
    const double log_tail = logM + static_cast<double>(degree + 1) * std::log(q) - std::log(1.0 - q);
    if (log_tail < best_log) {
      best_log = log_tail;
      best = TailBound{std::exp(logM), q};
    }
  }
  if (!std::isfinite(best.B)) return PowerSeries(std::move(c));
  return PowerSeries(std::move(c), best);
}

PowerSeries subordinate_pair(const PowerSeries& g, const PowerSeries& omega, std::size_t degree) {
  if (omega[0] != Complex{}) throw ContractError("subordinate_pair: omega(0) must be 0");
  const auto w = omega.coeffs();
  const std::size_t K = std::min(g.degree(), degree);
  std::vector<Complex> f{g[K]};
  for (std::size_t k = K; k-- > 0;) {
    f = series_ops::multiply(f, w, degree);
    f[0] += g[k];
  }
  f.resize(degree + 1);
  return PowerSeries(std::move(f));
}

PowerSeries lacunary_series(const LacunarySpec& spec, const PowerSeries& inner, std::size_t degree) {
  const LacunarySpec s(spec.m, spec.p);
  const auto m = static_cast<std::size_t>(s.m);
  const auto p = static_cast<std::size_t>(s.p);
  std::optional<TailBound> tail;
  std::size_t out_degree = degree;
  if (const auto& t = inner.tail()) {
    // |a_{mn+p}| <= B q^n = (B q^{-p/m}) (q^{1/m})^{mn+p}
    out_degree = std::min(degree, m * inner.degree() + p);
    if (t->q > 0.0) {
      tail = TailBound{t->B * std::pow(t->q, -static_cast<double>(p) / static_cast<double>(m)),
                       std::pow(t->q, 1.0 / static_cast<double>(m))};
    } else {
      tail = TailBound{0.0, 0.0};
    }
  }
  std::vector<Complex> c(out_degree + 1);
  for (std::size_t n = 0; m * n + p <= out_degree && n <= inner.degree(); ++n) c[m * n + p] = inner[n];
  return PowerSeries(std::move(c), tail);
}

}  // namespace bohrlab
