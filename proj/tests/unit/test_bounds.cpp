#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/series.hpp"

using namespace bohrlab;

namespace {

// sum n |a_n| r^{n-1} for z (z + a)/(1 + a z) term by term, no closed forms.
double derivative_majorant_of_mobius(double a, double r, int terms = 4000) {
  const auto f = mobius_series(a, static_cast<std::size_t>(terms));
  double acc = 0.0;
  for (int k = 0; k <= terms; ++k) acc += (k + 1) * std::abs(f[static_cast<std::size_t>(k)]) * std::pow(r, k);
  return acc;
}

}  // namespace

TEST_CASE("subordination ratio for c_n = n") {
  const auto n = WeightSequence::identity();
  const auto rep = g_ratio_bound(n, std::sqrt(0.6));
  CHECK(rep.s == 2);
  REQUIRE(rep.value);
  CHECK(*rep.value == doctest::Approx(1.2));
  CHECK(rep.all_ok());
  CHECK(rep.r_window.first == doctest::Approx(std::sqrt(0.5)));
  CHECK(rep.r_window.second == doctest::Approx(std::sqrt(2.0 / 3.0)));
  const auto low = g_ratio_bound(n, 0.5);
  CHECK(low.s == 1);
  CHECK(*low.value == doctest::Approx(1.0));
}

TEST_CASE("subordination ratio is scale invariant") {
  const double r = std::sqrt(0.75);
  const auto a = g_ratio_bound(WeightSequence::affine(2.0, 1.0, 0), r);
  const auto b = g_ratio_bound(WeightSequence::affine(2.0, 1.0, 0).scaled(7.0), r);
  REQUIRE(a.value);
  REQUIRE(b.value);
  CHECK(*a.value == doctest::Approx(*b.value).epsilon(1e-14));
  // s = 3 for (2n+1)/(2n+3) <= 3/4 < 7/9: G = (7/3) r^4
  CHECK(a.s == 3);
  CHECK(*a.value == doctest::Approx(7.0 / 3.0 * 0.75 * 0.75));
}

TEST_CASE("area windows") {
  const LacunarySpec plain(1, 0);
  const auto b = area_bound(plain, 0.8);
  CHECK(b.s == 2);
  CHECK(b.bound_coeff == 2);
  CHECK(b.exponent == 4);
  CHECK(b.r_window.first == doctest::Approx(0.5));
  CHECK(b.r_window.second == doctest::Approx(2.0 / 3.0));
  CHECK(b.value(0.8) == doctest::Approx(2.0 * std::numbers::pi * std::pow(0.8, 4)));
  CHECK(b.value(0.8, 0.5) == doctest::Approx(0.25 * b.value(0.8)));

  const LacunarySpec odd(2, 1);
  const auto low = area_bound(odd, 0.5);  // r^4 = 1/16 below p/(m+p) = 1/3
  CHECK(low.s == 0);
  CHECK(low.r_window.first == 0.0);
  CHECK(low.r_window.second == doctest::Approx(1.0 / 3.0));
  CHECK(low.bound_coeff == 1);
  const auto mid = area_bound(odd, std::pow(0.5, 0.25));  // r^4 = 1/2 in [1/3, 3/5]
  CHECK(mid.s == 1);
  CHECK(mid.bound_coeff == 3);
}

TEST_CASE("area bound is attained by the monomial and dominates the rest") {
  const LacunarySpec plain(1, 0);
  for (int s = 1; s <= 6; ++s) {
    const double lo = (s - 1.0) / s;
    const double hi = s / (s + 1.0);
    const double r = std::sqrt(0.5 * (lo + hi));
    const auto b = area_bound(plain, r);
    REQUIRE(b.s == s);
    for (int k = 1; k <= 3 * s; ++k) {
      const double v = area_functional(PowerSeries::monomial(static_cast<std::size_t>(k)), r).value;
      if (k == s) CHECK(v == doctest::Approx(b.value(r)).epsilon(1e-14));
      else CHECK(v < b.value(r));
    }
  }
}

TEST_CASE("area analogue of the Bohr radius") {
  const auto c = corollary3_constants();
  CHECK(c.y == doctest::Approx(2.29317).epsilon(1e-5));
  CHECK(c.residual < 1e-12);
  CHECK(c.critical_window == 3);
  CHECK(c.radius == doctest::Approx(std::pow(3.0, -1.0 / 6.0)).epsilon(1e-15));
  auto g = [](double s) { return std::pow(s, -1.0 / (2.0 * s)); };
  auto h = [](double s) { return std::sqrt(s / (s + 1.0)); };
  CHECK(g(2) > h(2));
  CHECK(g(3) < h(3));
}

TEST_CASE("exact majorant value for the derivative") {
  const auto n = WeightSequence::identity();
  for (const double a : {0.5, 0.7, 0.95}) {
    const double r = 0.2;
    const auto mb = theorem_D_exact(n, 1, -1, r, a);
    CHECK(mb.kind == MajorantKind::ExactD);
    CHECK(mb.all_ok());
    CHECK(mb.upper == doctest::Approx(derivative_majorant_of_mobius(a, r)).epsilon(1e-12));
    CHECK(mb.lower == mb.upper);
  }
  const auto out = theorem_D_exact(n, 1, -1, 0.5, 0.4);
  CHECK_FALSE(out.conditions_ok.at("a_gt_r"));
  CHECK_THROWS_AS(theorem_D_exact(n, 1, -1, 1.2, 0.4), DomainError);
  CHECK_THROWS_AS(theorem_D_exact(WeightSequence::binomial(2), 1, -1, 0.1, 0.4), ContractError);
}

TEST_CASE("two-sided majorant estimate") {
  const auto n = WeightSequence::identity();
  const double a = 0.4;
  const double r = a * 0.5 * (2.0 / 3.0 + 0.75);
  const int s = theorem_3_index(n, 1, r, a);
  CHECK(s == 2);
  const auto mb = theorem_3_bounds(n, 1, -1, s, r, a);
  CHECK(mb.kind == MajorantKind::TwoSided3);
  CHECK(mb.all_ok());
  CHECK(mb.lower == doctest::Approx(derivative_majorant_of_mobius(a, r)).epsilon(1e-12));
  CHECK(mb.upper >= mb.lower);
  CHECK_THROWS_AS(theorem_3_bounds(n, 1, -1, 1, r, a), ContractError);
  CHECK_THROWS_AS(theorem_3_index(n, 1, 0.5, 0.4), DomainError);
}

TEST_CASE("exact radius with fixed initial coefficient") {
  const auto one = theorem_E_radius(1, 1.0);
  CHECK(one.radius == doctest::Approx(1.0 - std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(one.condition_ok);
  CHECK(theorem_E_radius(1, 0.5).condition_ok);
  // at 0.429 the condition reads 0.7697 <= 0.7691 and fails
  CHECK_FALSE(theorem_E_radius(1, 0.429).condition_ok);
  const auto two = theorem_E_radius(2, 0.8);
  CHECK(two.radius == doctest::Approx((1.0 - std::cbrt(1.8 / 2.6)) / 0.8).epsilon(1e-14));
  CHECK_THROWS_AS(theorem_E_radius(0, 0.5), DomainError);
  CHECK_THROWS_AS(theorem_E_radius(1, 0.0), DomainError);
}

TEST_CASE("Bohr-Bombieri function") {
  CHECK(bombieri_function(0.0) == 1.0);
  CHECK(bombieri_function(1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bombieri_function(std::numbers::sqrt2 / 2.0) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(bombieri_function(0.5) == doctest::Approx(2.0 * (3.0 - std::sqrt(6.0))).epsilon(1e-14));
  CHECK_THROWS_AS(bombieri_function(0.75), UnsupportedRange);
  CHECK(bombieri_radius(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(bombieri_radius(0.75) == doctest::Approx(0.4));
  CHECK_THROWS_AS(bombieri_radius(0.5), UnsupportedRange);
}

TEST_CASE("old estimates for the derivative") {
  for (const double a : {0.1, 0.3, 0.429}) {
    const double r = old_lower_bound(a);
    CHECK(old_derivative_majorant(r, a) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r <= upper_bound(a));
  }
  CHECK(old_lower_bound(0.0) == doctest::Approx(1.0 - std::sqrt(0.5)));
  CHECK_THROWS_AS(upper_bound(0.0), DomainError);
  CHECK_THROWS_AS(old_lower_bound(1.0), DomainError);
}
