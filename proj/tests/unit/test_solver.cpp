#include <doctest.h>

#include <chrono>
#include <cmath>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/solver.hpp"

using namespace bohrlab;

namespace {

struct PrintedRow {
  double a, old_lower;
  int s_floor;
  double new_lower, upper;
};

// Reference values of the comparison table, each truncated at 5 decimals.
const PrintedRow kPrinted[] = {
    {0.429, 0.23298, 2, 0.28652, 0.28674}, {0.42, 0.23398, 2, 0.28656, 0.28931},
    {0.4, 0.23623, 2, 0.28651, 0.29520},   {0.38, 0.23853, 3, 0.28598, 0.30134},
    {0.36, 0.24087, 3, 0.28210, 0.30774},  {0.34, 0.24326, 4, 0.27674, 0.31442},
    {0.32, 0.24570, 5, 0.26935, 0.32140},  {0.3, 0.24819, 6, 0.26002, 0.32870},
    {0.28, 0.25073, 8, 0.24899, 0.33635},  {0.26, 0.25332, 9, 0.23631, 0.34436},
};

}  // namespace

TEST_CASE("g is continuous at the integers") {
  for (const double a : {0.26, 0.35, 0.42}) {
    for (int p = 2; p <= 12; ++p) {
      const double left = g_of_t(std::nextafter(static_cast<double>(p), 0.0), a);
      const double right = g_of_t(static_cast<double>(p), a);
      CHECK(left == doctest::Approx(right).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(g_of_t(0.5, 0.3), DomainError);
  CHECK_THROWS_AS(g_of_t(2.0, 1.0), DomainError);
}

TEST_CASE("closed form of g against the defining expression") {
  // ( ([t]+1)/2 (t/(t+1))^{[t]-1} )^{1/2} (1/a - a)(1/(1 - a^2 t/(t+1))^2 - 1) + a
  const double a = 0.33;
  for (const double t : {1.0, 2.5, 3.0, 7.25}) {
    const double k = std::floor(t);
    const double x = t / (t + 1.0);
    double manual = std::sqrt((k + 1.0) / 2.0 * std::pow(x, k - 1.0));
    manual *= (1.0 / a - a) * (1.0 / ((1.0 - a * a * x) * (1.0 - a * a * x)) - 1.0);
    CHECK(g_of_t(t, a) == doctest::Approx(a + manual).epsilon(1e-15));
  }
}

TEST_CASE("root of g = 1") {
  const auto res = solve_s(0.4);
  REQUIRE(res.status == SolveStatus::Ok);
  CHECK(std::floor(*res.s) == 2.0);
  CHECK(res.residual <= 1e-10);
  CHECK(new_lower_bound(0.4) == doctest::Approx(0.4 * *res.s / (1.0 + *res.s)));

  CHECK(solve_s(0.5).status == SolveStatus::TheoremERegime);
  CHECK(solve_s(0.0).status == SolveStatus::InvalidArgument);
  CHECK(solve_s(1.0).status == SolveStatus::InvalidArgument);
  CHECK_THROWS_AS(new_lower_bound(0.5), UnsupportedRange);
}

TEST_CASE("root equation in its original form") {
  // (([s]+1)/2 (s/(s+1))^{[s]-1})^{1/2} (1/(1 - a^2 s/(s+1))^2 - 1) = a/(1+a)
  for (const double a : {0.26, 0.3, 0.38, 0.42}) {
    const double s = *solve_s(a).s;
    const double k = std::floor(s);
    const double x = s / (s + 1.0);
    const double lhs =
        std::sqrt((k + 1.0) / 2.0 * std::pow(x, k - 1.0)) * (1.0 / std::pow(1.0 - a * a * x, 2) - 1.0);
    CHECK(lhs == doctest::Approx(a / (1.0 + a)).epsilon(1e-10));
  }
}

TEST_CASE("thresholds") {
  const double a0 = threshold_a0();
  const double a1 = threshold_a1();
  CHECK(a0 == doctest::Approx(0.429782).epsilon(1e-6));
  CHECK(a1 == doctest::Approx(0.321037).epsilon(1e-6));
  CHECK(g_of_t(2.0, a0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(solve_s(a0 - 1e-9).status == SolveStatus::Ok);
  CHECK(solve_s(a0 + 1e-9).status == SolveStatus::TheoremERegime);
  // upper bound meets a^2 at a1
  CHECK(a1 * upper_bound(a1) == doctest::Approx(a1 * a1).epsilon(1e-12));
}

TEST_CASE("comparison table reproduces the reference digits") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = comparison_table(default_table_a_values());
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed < 1.0);
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& p = kPrinted[i];
    CAPTURE(p.a);
    CHECK(row.a == p.a);
    REQUIRE(row.s_floor);
    CHECK(*row.s_floor == p.s_floor);
    CHECK(std::abs(row.old_lower - p.old_lower) <= 1e-5);
    CHECK(std::abs(*row.new_lower - p.new_lower) <= 1e-5);
    CHECK(std::abs(row.upper - p.upper) <= 1e-5);
    // truncation: computed value lies in [printed, printed + 1e-5)
    CHECK(row.old_lower >= p.old_lower);
    CHECK(*row.new_lower >= p.new_lower);
    CHECK(row.upper >= p.upper);
  }
}

TEST_CASE("comparison table routes large a to the exact regime") {
  const std::vector<double> a{0.5};
  const auto rows = comparison_table(a);
  CHECK(rows[0].regime == "theorem-E");
  CHECK_FALSE(rows[0].new_lower);
  CHECK(rows[0].upper == doctest::Approx(theorem_E_radius(1, 0.5).radius));
  const std::vector<double> bad{1.5};
  CHECK_THROWS_AS(comparison_table(bad), DomainError);
}

TEST_CASE("radius from a monotone bound") {
  for (const double a : {0.1, 0.3, 0.45}) {
    const double r = radius_from_bound([a](double x) { return old_derivative_majorant(x, a); }, 1.0, 0.99);
    CHECK(r == doctest::Approx(old_lower_bound(a)).epsilon(1e-11));
  }
  // tangential contact at 1/3 limits the accuracy to about sqrt(tol)
  CHECK(radius_from_bound(bombieri_function, 1.0, std::sqrt(0.5)) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK_THROWS_AS(radius_from_bound([](double) { return 2.0; }, 1.0, 0.5), DomainError);
}
