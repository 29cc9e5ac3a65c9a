#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/oracle.hpp"

using namespace bohrlab;

namespace {

// Random subordinate pair: g a polynomial with coefficients in the unit disk,
// omega a Schur function fixing 0.
std::pair<PowerSeries, PowerSeries> random_pair(std::uint64_t seed, long t, std::size_t N) {
  TrialRng rng(seed, static_cast<std::uint64_t>(t));
  std::vector<Complex> b(static_cast<std::size_t>(rng.integer(1, 10)) + 1);
  for (auto& x : b) x = rng.in_disk(1.0);
  std::vector<Complex> gamma{Complex{}};
  const int count = rng.integer(1, 8);
  for (int k = 0; k < count; ++k) gamma.push_back(rng.in_disk(0.95));
  if (rng.coin()) gamma.back() = rng.on_circle();
  const PowerSeries g(b);
  const auto omega = schur_series(SchurParams(gamma), N);
  return {subordinate_pair(g, omega, N), g};
}

// max |f| on |z| = r from the stored coefficients
double max_on_circle(const PowerSeries& f, double r, int nodes = 2048) {
  double m = 0.0;
  for (int k = 0; k < nodes; ++k) {
    m = std::max(m, std::abs(series_ops::horner(f.coeffs(), std::polar(r, 2.0 * std::numbers::pi * k / nodes))));
  }
  return m;
}

}  // namespace

TEST_CASE("trial generators are deterministic") {
  TrialRng a(42, 7);
  TrialRng b(42, 7);
  TrialRng c(42, 8);
  const auto da = generators::bounded(a, 64);
  const auto db = generators::bounded(b, 64);
  const auto dc = generators::bounded(c, 64);
  CHECK(da.params == db.params);
  CHECK(da.f == db.f);
  CHECK(da.params != dc.params);
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("random generators stay in the unit ball") {
  // Truncations of unimodular Schur functions can overshoot 1 on the circle
  // itself, so test on |z| = 0.9 where the dropped tail is below 1e-10.
  for (long t = 0; t < 50; ++t) {
    TrialRng rng(3, static_cast<std::uint64_t>(t));
    const auto d = generators::bounded(rng, 256);
    CHECK(max_on_circle(d.f, 0.9) <= 1.0 + 1e-9);
    if (d.params.at("generator") == "blaschke") CHECK(sup_norm_estimate(d.f) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("conditioned generator fixes the leading coefficient") {
  long made = 0;
  for (long t = 0; t < 200; ++t) {
    TrialRng rng(11, static_cast<std::uint64_t>(t));
    const auto d = generators::conditioned(rng, 2, 0.4, 256);
    if (!d) continue;
    ++made;
    CHECK(d->f.vanish_order() == 2);
    CHECK(std::abs(d->f[2]) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(std::abs(d->f[1]) == 0.0);
    CHECK(max_on_circle(d->f, 0.9, 512) <= 1.0 + 1e-9);
  }
  CHECK(made > 150);
  TrialRng rng(1, 1);
  CHECK_THROWS_AS(generators::conditioned(rng, 1, 1.0, 64), DomainError);
}

TEST_CASE("goluzin margin at the boundary extremal") {
  // f = C0 + e^{i phi} C1 z^2, g = C0 + C1 z, weights r^2, r^4 with r^2 = 1/2
  const Complex C0{0.3, -0.1};
  const Complex C1{0.5, 0.2};
  const Complex rot = std::polar(1.0, 0.9);
  const PowerSeries f({C0, 0.0, rot * C1});
  const PowerSeries g({C0, C1});
  CHECK(goluzin_check(f, g, {0.5, 0.25}) == doctest::Approx(0.25 * std::norm(C1)));
  // c_n = n lambda rule at s = 2, r^2 = 1/2: lambda = (2 r^4, 2 r^4) = (1/2, 1/2)
  const auto lam = lambda_sequence(WeightSequence::identity(), std::sqrt(0.5), 2, 2);
  CHECK(lam.values[0] == doctest::Approx(0.5));
  CHECK(lam.values[1] == doctest::Approx(0.5));
  CHECK(std::abs(goluzin_check(f, g, lam.values)) < 1e-15);
}

TEST_CASE("goluzin margin on random subordinate pairs") {
  const std::size_t N = 64;
  std::vector<std::vector<double>> families;
  std::vector<double> inv(N), inv2(N);
  for (std::size_t k = 0; k < N; ++k) {
    inv[k] = 1.0 / static_cast<double>(k + 1);
    inv2[k] = inv[k] * inv[k];
  }
  families.push_back(inv);
  families.push_back(inv2);
  for (const std::size_t len : {1u, 2u, 5u, 17u}) families.emplace_back(len, 1.0);
  double worst = 0.0;
  for (long t = 0; t < 10000; ++t) {
    const auto [f, g] = random_pair(99, t, N);
    for (const auto& lam : families) worst = std::min(worst, goluzin_check(f, g, lam));
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("littlewood for p = 2 is the geometric weight case") {
  const std::size_t N = 256;
  for (long t = 0; t < 200; ++t) {
    const auto [f, g] = random_pair(5, t, N);
    for (const double r : {0.3, 0.6, 0.9}) {
      std::vector<double> lam(N);
      double r2n = 1.0;
      for (std::size_t k = 0; k < N; ++k) lam[k] = (r2n *= r * r);
      const double margin = goluzin_check(f, g, lam);
      const double direct = l2_norm_sq(g, r).value - l2_norm_sq(f, r).value;
      CHECK(std::abs(margin - direct) <= 1e-12);
      CHECK(margin >= -1e-9);
    }
  }
}

TEST_CASE("goluzin rejects increasing or negative weights") {
  const PowerSeries f({0.0, 0.5});
  CHECK_THROWS_AS(goluzin_check(f, f, {0.5, 0.6}), ContractError);
  CHECK_THROWS_AS(goluzin_check(f, f, {-0.1}), ContractError);
}

TEST_CASE("lambda sequence for c_n = n") {
  const auto n = WeightSequence::identity();
  const auto lam = lambda_sequence(n, std::sqrt(0.6), 2);
  CHECK(lam.values[0] == doctest::Approx(0.72));
  CHECK(lam.values[1] == doctest::Approx(0.72));
  CHECK(lam.values[2] == doctest::Approx(0.648));
  CHECK(lam.non_increasing);
  CHECK(lam.values.size() == 1000);

  const double r = 0.4;
  const auto one = lambda_sequence(n, r, 1, 20);
  for (int k = 1; k <= 20; ++k) CHECK(one.values[static_cast<std::size_t>(k - 1)] == doctest::Approx(k * std::pow(r, 2 * k)));

  // at r^2 = s/(s+1) the entries at s and s + 1 coincide
  const int s = 4;
  const auto edge = lambda_sequence(n, std::sqrt(s / (s + 1.0)), s, 50);
  CHECK(edge.values[s - 1] == doctest::Approx(edge.values[s]).epsilon(1e-14));
  CHECK(edge.non_increasing);
  CHECK_THROWS_AS(lambda_sequence(n, std::sqrt(0.9), 2), ContractError);
}

TEST_CASE("lambda monotonicity holds exactly below the window edge") {
  const auto n = WeightSequence::identity();
  for (int s = 1; s <= 20; ++s) {
    CAPTURE(s);
    const double edge = s / (s + 1.0);
    const double lo = s == 1 ? 0.0 : (s - 1.0) / s;
    // inside the window
    CHECK(lambda_rule(n, std::sqrt(0.5 * (lo + edge)), s).non_increasing);
    CHECK(lambda_rule(n, std::sqrt(edge), s).non_increasing);
    // just past the upper edge the entries at s and s + 1 increase
    CHECK_FALSE(lambda_rule(n, std::sqrt(edge + 1e-6), s).non_increasing);
    CHECK_FALSE(lambda_rule(n, std::sqrt(0.5 * (edge + (s + 1.0) / (s + 2.0))), s).non_increasing);
  }
}

TEST_CASE("fuzz reports are reproducible") {
  FuzzParams p;
  p.r = 1.0 / 3.0;
  const auto a = fuzz("bohr_13", p, 300, 7);
  const auto b = fuzz("bohr_13", p, 300, 7);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.argmax_witness == b.argmax_witness);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.passed());
  CHECK_THROWS_AS(fuzz("nope", p, 1, 1), ContractError);
  CHECK_THROWS_AS(fuzz("bohr_13", p, -1, 1), ContractError);
}

TEST_CASE("fuzz of the area bound") {
  FuzzParams p;
  p.r = std::sqrt(0.6);
  const auto rep = fuzz("area", p, 10000, 1);
  CHECK(rep.violations == 0);
  CHECK(rep.max_ratio >= 0.999);
  CHECK(rep.max_ratio <= 1.0 + 1e-9);
}

TEST_CASE("fuzz of the exact derivative majorant reaches 1") {
  FuzzParams p;
  p.a = 0.6;
  p.r = theorem_E_radius(1, 0.6).radius;
  const auto rep = fuzz("theorem_D", p, 2000, 3);
  CHECK(rep.violations == 0);
  CHECK(rep.max_ratio == doctest::Approx(1.0).epsilon(1e-9));
  p.r = 0.7;  // r > a breaks the hypothesis
  CHECK_THROWS_AS(fuzz("theorem_D", p, 10, 3), ContractError);
}

TEST_CASE("fuzz of the old derivative estimate") {
  FuzzParams p;
  p.a = 0.3;
  p.r = old_lower_bound(0.3);
  const auto rep = fuzz("old_derivative_bound", p, 2000, 5);
  CHECK(rep.violations == 0);
  CHECK(rep.infeasible < 200);
}

TEST_CASE("area extremal search") {
  const LacunarySpec plain(1, 0);
  const auto c3 = extremal_search_area(plain, 3, std::pow(3.0, -1.0 / 6.0), 200, 1);
  CHECK(c3.best_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c3.extremal_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c3.best_label == "z^3");

  const auto c1 = extremal_search_area(plain, 1, std::sqrt(0.3), 200, 2);
  CHECK(c1.best_label == "z^1");
  CHECK(c1.best_ratio == doctest::Approx(1.0).epsilon(1e-9));

  const auto c2 = extremal_search_area(plain, 2, std::sqrt(0.55), 400, 3);
  CHECK(c2.best_label == "z^2");
  CHECK(c2.best_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c2.evaluated == 5 + 400);

  CHECK_THROWS_AS(extremal_search_area(plain, 2, std::sqrt(0.3), 10, 1), ContractError);
}
