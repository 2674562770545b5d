#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "boolfun/hermite.hpp"

using namespace boolfun;

namespace {

MultiIndex idx(std::initializer_list<int> degrees) {
  MultiIndex alpha;
  int axis = 0;
  for (int d : degrees) alpha.deg[static_cast<std::size_t>(axis++)] =
      static_cast<std::uint8_t>(d);
  return alpha;
}

// x1 on a 1-dimensional expansion.
HermiteExpansion coordinate() {
  HermiteExpansion f(1, 1);
  f.set(idx({1}), 1.0);
  return f;
}

// x1 * x2.
HermiteExpansion product_of_two() {
  HermiteExpansion f(2, 2);
  f.set(idx({1, 1}), 1.0);
  return f;
}

// x1^2 = sqrt(2) h_2 + h_0.
HermiteExpansion coordinate_squared() {
  HermiteExpansion f(1, 2);
  f.set(idx({0}), 1.0);
  f.set(idx({2}), std::sqrt(2.0));
  return f;
}

}  // namespace

TEST_CASE("orthonormal hermite values match the explicit low-degree forms") {
  for (double x : {-2.0, -0.3, 0.0, 0.5, 1.3, 2.7}) {
    CHECK(hermite_value(0, x) == 1.0);
    CHECK(hermite_value(1, x) == x);
    CHECK(hermite_value(2, x) ==
          doctest::Approx((x * x - 1.0) / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(hermite_value(3, x) ==
          doctest::Approx((x * x * x - 3.0 * x) / std::sqrt(6.0))
              .epsilon(1e-14));
    // Three-term recurrence at degree 5.
    double h4 = hermite_value(4, x);
    double h5 = hermite_value(5, x);
    CHECK(std::sqrt(5.0) * h5 ==
          doctest::Approx(x * h4 - std::sqrt(4.0) * hermite_value(3, x))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(hermite_value(-1, 0.0), std::invalid_argument);
}

TEST_CASE("expansion bookkeeping: coefficients, moments, degree") {
  HermiteExpansion f(2, 3);
  CHECK(f.dimension() == 2);
  CHECK(f.max_degree() == 3);
  CHECK(f.degree_present() == 0);

  f.set(idx({0, 0}), 1.5);
  f.set(idx({2, 1}), -0.5);
  CHECK(f.degree_present() == 3);
  CHECK(f.mean() == 1.5);
  CHECK(f.l2_norm_sq() == doctest::Approx(1.5 * 1.5 + 0.25).epsilon(1e-15));
  CHECK(f.variance() == doctest::Approx(0.25).epsilon(1e-15));

  auto w = f.level_weights();
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(2.25));
  CHECK(w[1] == 0.0);
  CHECK(w[2] == 0.0);
  CHECK(w[3] == doctest::Approx(0.25));

  // Erasing: setting a coefficient to zero removes it from the support.
  f.set(idx({2, 1}), 0.0);
  CHECK(f.degree_present() == 0);
  CHECK(f.coefficients().size() == 1);

  CHECK_THROWS_AS(f.set(idx({0, 0, 1}), 1.0), std::out_of_range);
  CHECK_THROWS_AS(f.set(idx({4, 0}), 1.0), std::out_of_range);
  CHECK_THROWS_AS(HermiteExpansion(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(HermiteExpansion(1, 17), std::invalid_argument);
}

TEST_CASE("evaluate sums the tensor basis pointwise") {
  auto f = coordinate_squared();
  for (double x : {-1.5, 0.0, 0.4, 2.0}) {
    CHECK(f.evaluate({x, 0, 0, 0, 0, 0}) ==
          doctest::Approx(x * x).epsilon(1e-13));
  }
  auto g = product_of_two();
  CHECK(g.evaluate({1.5, -2.0, 0, 0, 0, 0}) ==
        doctest::Approx(-3.0).epsilon(1e-13));
}

TEST_CASE("partial derivatives act as ladder operators") {
  // d/dx h_k = sqrt(k) h_{k-1}, applied to h_3 three times: sqrt(6) h_0.
  HermiteExpansion f(1, 3);
  f.set(idx({3}), 1.0);
  auto d1 = hermite_partial(f, 1);
  CHECK(d1.coefficient(idx({2})) == doctest::Approx(std::sqrt(3.0)));
  auto d3 = hermite_partial(hermite_partial(d1, 1), 1);
  CHECK(d3.mean() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));

  CHECK_THROWS_AS(hermite_partial(f, 0), std::out_of_range);
  CHECK_THROWS_AS(hermite_partial(f, 2), std::out_of_range);
}

TEST_CASE("ou semigroup: multiplier, composition, identity") {
  auto f = random_expansion(2, 4, 99);
  auto id = ou_semigroup(f, 0.0);
  for (const auto& [alpha, c] : f.coefficients())
    CHECK(id.coefficient(alpha) == c);

  auto a = ou_semigroup(ou_semigroup(f, 0.3), 0.9);
  auto b = ou_semigroup(f, 1.2);
  for (const auto& [alpha, c] : b.coefficients())
    CHECK(a.coefficient(alpha) == doctest::Approx(c).epsilon(1e-13));

  for (const auto& [alpha, c] : f.coefficients()) {
    double expected = c * std::exp(-0.7 * alpha.total());
    CHECK(ou_semigroup(f, 0.7).coefficient(alpha) ==
          doctest::Approx(expected).epsilon(1e-14));
  }

  // Variance contracts at least as fast as e^{-2t}.
  CHECK(ou_semigroup(f, 0.5).variance() <=
        std::exp(-1.0) * f.variance() + 1e-13);

  CHECK_THROWS_AS(ou_semigroup(f, -0.1), std::invalid_argument);
}

TEST_CASE("gradient moments: worked values and tuple-enumeration oracle") {
  CHECK(grad_moment(coordinate(), 1) == doctest::Approx(1.0));
  CHECK(grad_moment(coordinate_squared(), 2) ==
        doctest::Approx(4.0).epsilon(1e-14));
  CHECK(grad_moment(product_of_two(), 1) == 0.0);
  CHECK(grad_moment(product_of_two(), 2) ==
        doctest::Approx(2.0).epsilon(1e-14));

  for (int n : {1, 2, 3}) {
    auto f = random_expansion(n, 4, 123 + static_cast<std::uint64_t>(n));
    for (int k = 1; k <= 3; ++k) {
      CHECK(grad_moment(f, k) ==
            doctest::Approx(grad_moment_oracle(f, k)).epsilon(1e-12));
    }
  }

  // At t = 0 the semigroup moment includes the binomial tail over levels.
  auto f = random_expansion(2, 3, 5);
  for (int k = 1; k <= 2; ++k) {
    double expected = 0.0;
    auto w = f.level_weights();
    for (std::size_t a = static_cast<std::size_t>(k); a < w.size(); ++a) {
      double binom = 1.0;
      for (int r = 0; r < k; ++r)
        binom *= static_cast<double>(a - static_cast<std::size_t>(r));
      // k! C(a,k) = a (a-1) ... (a-k+1); weight w[a] carries sum c^2.
      expected += binom * w[a];
    }
    CHECK(semigroup_grad_moment(f, k, 0.0) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("variance taylor representation: worked examples") {
  // Linear: everything is in the first moment.
  auto lin = variance_taylor_check(coordinate(), 1);
  CHECK(lin.variance == doctest::Approx(1.0));
  CHECK(lin.moment_sum == doctest::Approx(1.0));
  CHECK(lin.remainder == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(lin.residual <= 1e-12);

  // x1 x2 at p = 1: no first moment, remainder exactly 1.
  auto prod = variance_taylor_check(product_of_two(), 1);
  CHECK(prod.variance == doctest::Approx(1.0));
  CHECK(prod.moment_sum == doctest::Approx(0.0));
  CHECK(prod.remainder == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(prod.residual <= 1e-12);

  // x1^2 at p = 2: Var = 2 carried by (1/2!) grad_moment(2) = 2.
  auto sq = variance_taylor_check(coordinate_squared(), 2);
  CHECK(sq.variance == doctest::Approx(2.0));
  CHECK(sq.moment_sum == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(sq.remainder == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(sq.residual <= 1e-12);

  CHECK_THROWS_AS(variance_taylor_check(coordinate(), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(variance_taylor_check(coordinate(), 13),
                  std::invalid_argument);
}

TEST_CASE("variance taylor representation holds on random expansions") {
  for (int n : {1, 2, 3}) {
    for (int p : {1, 2, 3}) {
      for (int rep = 0; rep < 10; ++rep) {
        auto f = random_expansion(
            n, 5, 10000 + static_cast<std::uint64_t>(100 * n + 10 * p + rep));
        auto r = variance_taylor_check(f, p);
        CHECK(r.residual <= 1e-9);
      }
    }
  }
}

TEST_CASE("a_k coefficients: closed form, recursion, scalar masses") {
  for (double t : {0.0, 0.1, 0.8, 3.0}) {
    CHECK(a_k_value(0, t) == doctest::Approx(2.0 * std::exp(-2.0 * t)));
  }
  CHECK(a_k_value(1, 0.0) == 0.0);
  CHECK_THROWS_AS(a_k_value(-1, 0.5), std::invalid_argument);

  auto rep = a_k_coefficients_check(10);
  CHECK(rep.k_max == 10);
  CHECK(rep.max_recursion_residual <= 1e-8);
  CHECK(rep.max_integral_residual <= 1e-8);

  CHECK_THROWS_AS(a_k_coefficients_check(0), std::invalid_argument);
  CHECK_THROWS_AS(a_k_coefficients_check(13), std::invalid_argument);
}

TEST_CASE("inverse poincare with equality exactly at degree one") {
  auto lin = inverse_poincare_check(coordinate());
  CHECK(lin.holds);
  CHECK(lin.equality);
  CHECK(lin.variance == doctest::Approx(1.0));
  CHECK(lin.grad_sq == doctest::Approx(1.0));

  auto prod = inverse_poincare_check(product_of_two());
  CHECK(prod.holds);
  CHECK(!prod.equality);
  CHECK(prod.grad_sq == doctest::Approx(2.0));

  for (int rep = 0; rep < 10; ++rep) {
    auto f = random_expansion(3, 4, 2000 + static_cast<std::uint64_t>(rep));
    auto r = inverse_poincare_check(f);
    CHECK(r.holds);
    CHECK(r.variance <= r.grad_sq + 1e-12);
  }
}

TEST_CASE("gauss-hermite quadrature integrates gaussian moments exactly") {
  for (int order : {8, 24}) {
    auto rule = QuadratureRule::make(order);
    CHECK(rule.order() == order);
    CHECK(rule.exact_degree() == 2 * order - 1);

    // E[x^{2m}] = (2m-1)!! for 2m within the exactness degree.
    double dfact = 1.0;
    for (int m = 1; 2 * m <= rule.exact_degree(); ++m) {
      dfact *= 2 * m - 1;
      double got = rule.integrate(1, [m](const auto& x) {
        return std::pow(x[0], 2.0 * m);
      });
      CHECK(got == doctest::Approx(dfact).epsilon(1e-12));
      // Odd moments cancel pairwise; roundoff scales with the magnitude of
      // the summed terms, not with the (zero) target.
      double odd = rule.integrate(1, [m](const auto& x) {
        return std::pow(x[0], 2.0 * m - 1.0);
      });
      CHECK(std::fabs(odd) <= 1e-10 * std::max(1.0, dfact));
    }

    // Orthonormality through the tensor rule in two dimensions.
    double dot = rule.integrate(2, [](const auto& x) {
      return hermite_value(2, x[0]) * hermite_value(1, x[1]) *
             hermite_value(2, x[0]) * hermite_value(1, x[1]);
    });
    CHECK(dot == doctest::Approx(1.0).epsilon(1e-11));
  }

  CHECK_THROWS_AS(QuadratureRule::make(0), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureRule::make(41), std::invalid_argument);
  auto rule = QuadratureRule::make(24);
  CHECK_THROWS_AS(rule.integrate(6, [](const auto&) { return 1.0; }),
                  capacity_error);

  // l1 norm via quadrature.  On |x| the integrand has a kink at the origin,
  // so Gauss-Hermite converges slowly: expect percent-level accuracy only.
  CHECK(rule.l1_norm(coordinate()) ==
        doctest::Approx(std::sqrt(2.0 / std::acos(-1.0))).epsilon(0.02));
  // On a nonnegative polynomial the absolute value never bites and the
  // rule is exact: E|x^2| = 1.
  CHECK(rule.l1_norm(coordinate_squared()) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gaussian talagrand report: product worked example") {
  auto rule = QuadratureRule::make(kDefaultQuadratureOrder);
  auto rep = gaussian_talagrand_report(product_of_two(), 1, rule);
  CHECK(rep.name == "gaussian-talagrand");
  CHECK(!rep.degenerate);
  CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(rep.ratio == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.params.at("p") == 1.0);

  // Pure first-order function: lhs = 0 and every pair derivative vanishes.
  auto lin = gaussian_talagrand_report(coordinate(), 1, rule);
  CHECK(lin.degenerate);
  CHECK(lin.lhs == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(lin.rhs == 0.0);

  // Under-resolved quadrature is a configuration error.
  HermiteExpansion deg3(1, 3);
  deg3.set(idx({3}), 1.0);
  CHECK_THROWS_AS(gaussian_talagrand_report(deg3, 1, QuadratureRule::make(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_talagrand_report(product_of_two(), 0, rule),
                  std::invalid_argument);
}

TEST_CASE("nelson hypercontractivity spot checks") {
  auto rule = QuadratureRule::make(kDefaultQuadratureOrder);
  for (int seed = 0; seed < 5; ++seed) {
    auto f = random_expansion(2, 3, 3000 + static_cast<std::uint64_t>(seed));
    for (double t : {0.2, 0.8}) {
      for (double q : {2.0, 3.0}) {
        auto rep = nelson_check(f, t, q, rule);
        CHECK(rep.p == doctest::Approx(1.0 + (q - 1.0) * std::exp(-2.0 * t)));
        CHECK(rep.holds);
        CHECK(rep.lhs <= rep.rhs + 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(nelson_check(coordinate(), -0.1, 2.0,
                               QuadratureRule::make(8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nelson_check(coordinate(), 0.5, 1.0,
                               QuadratureRule::make(8)),
                  std::invalid_argument);
}

TEST_CASE("mehler integral representation matches the spectral semigroup") {
  auto rule = QuadratureRule::make(32);
  for (int n : {1, 2}) {
    auto f = random_expansion(n, 4, 4000 + static_cast<std::uint64_t>(n));
    for (double t : {0.15, 0.8}) {
      auto pt = ou_semigroup(f, t);
      for (double u : {-1.2, 0.0, 0.7}) {
        std::array<double, kMaxGaussianDimension> x{u, -0.4, 0, 0, 0, 0};
        CHECK(ou_integral_eval(f, t, x, rule) ==
              doctest::Approx(pt.evaluate(x)).epsilon(1e-8));
      }
    }
  }
  auto f3 = random_expansion(3, 2, 1);
  std::array<double, kMaxGaussianDimension> origin{};
  CHECK_THROWS_AS(ou_integral_eval(f3, 0.5, origin, rule), capacity_error);
}

TEST_CASE("expansion text format roundtrips exactly") {
  auto f = random_expansion(3, 4, 777);
  std::ostringstream out;
  write_expansion(out, f);
  std::istringstream in(out.str());
  auto g = read_expansion(in);
  CHECK(g.dimension() == 3);
  REQUIRE(g.coefficients().size() == f.coefficients().size());
  for (const auto& [alpha, c] : f.coefficients())
    CHECK(g.coefficient(alpha) == c);

  auto expect_parse_error = [](const std::string& text, int line) {
    std::istringstream bad(text);
    try {
      read_expansion(bad);
      FAIL_CHECK("expected parse_error for: " << text);
    } catch (const parse_error& e) {
      CHECK(e.line() == line);
    }
  };
  expect_parse_error("maxdeg=2\n", 1);
  expect_parse_error("n=2 maxdeg=2\n0 1.5\n", 2);       // missing a degree
  expect_parse_error("n=1 maxdeg=2\n0 1.5 9\n", 2);     // trailing content
  expect_parse_error("n=1 maxdeg=2\n5 1.0\n", 2);       // degree overflow
  expect_parse_error("n=1 maxdeg=2\nx 1.0\n", 2);       // not an integer
}
