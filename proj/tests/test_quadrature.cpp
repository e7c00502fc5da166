// Gauss rules and the closed-form integration of the near-field expansions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "ebem/medium.hpp"
#include "ebem/quadrature.hpp"
#include "ebem/scalars.hpp"
#include "ebem/types.hpp"

using namespace ebem;

namespace {

// Composite Gauss over dyadic subintervals of (0, 1]; resolves integrable
// endpoint singularities (logarithms) to near machine precision and serves
// as the independent oracle for the closed-form integrals below.
template <class F>
cd dyadic_integral(F f) {
  const GaussRule& rule = gauss_rule(16);
  cd total = 0.0;
  double hi = 1.0;
  for (int m = 0; m < 60; ++m) {
    const double lo = 0.5 * hi;
    cd part = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k)
      part += rule.w[k] * f(lo + (hi - lo) * rule.x[k]);
    total += (hi - lo) * part;
    hi = lo;
  }
  return total;
}

std::array<cd, 10> to_array(const ScalarSet& s) {
  return {s.gpsi, s.gchi, s.d1, s.d2, s.d3, s.n1, s.n2, s.n4, s.n5, s.n7};
}

}  // namespace

TEST_CASE("gauss rules: structure and polynomial exactness") {
  for (int n : {1, 2, 3, 4, 5, 8, 13, 16, 24, 32, 48, 64}) {
    const GaussRule& rule = gauss_rule(n);
    REQUIRE(int(rule.x.size()) == n);
    REQUIRE(int(rule.w.size()) == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(rule.x[i] > 0.0);
      CHECK(rule.x[i] < 1.0);
      if (i > 0) CHECK(rule.x[i] > rule.x[i - 1]);
      CHECK(rule.x[i] + rule.x[n - 1 - i] == doctest::Approx(1.0).epsilon(1e-15));
      wsum += rule.w[i];
    }
    CHECK(std::abs(wsum - 1.0) <= 1e-14);
    // Exact for polynomials of degree <= 2n - 1.
    for (int k = 1; k < 2 * n; ++k) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += rule.w[i] * std::pow(rule.x[i], k);
      CHECK(std::abs(q - 1.0 / (k + 1)) <= 1e-13);
    }
  }
}

TEST_CASE("gauss rules: cached references and order limits") {
  CHECK(&gauss_rule(8) == &gauss_rule(8));
  CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(65), std::invalid_argument);
  // Plain analytic integrand as a smoke test.
  const GaussRule& rule = gauss_rule(16);
  double q = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    q += rule.w[i] * std::cos(3.0 * rule.x[i]);
  CHECK(std::abs(q - std::sin(3.0) / 3.0) <= 1e-15);
}

TEST_CASE("log-series closed-form integrals match composite quadrature") {
  LogSeries s;
  s.add_term(0, cd(0.3, -0.2), cd(0.05, 0.11));
  s.add_term(1, cd(-1.1, 0.4), cd(0.0, -0.3));
  s.add_term(4, cd(0.7, 0.9), cd(-0.25, 0.02));
  double rpow[8];
  for (double c : {0.17, 0.93, 1.9}) {
    for (int j = 0; j <= 3; ++j) {
      const cd got = s.integrate_scaled(c, std::log(c), j);
      const cd want = dyadic_integral([&](double u) {
        const double r = c * u;
        rpow[0] = 1.0;
        for (int p = 1; p < 8; ++p) rpow[p] = rpow[p - 1] * r;
        return std::pow(u, j) * s.eval(r, std::log(r), rpow);
      });
      CHECK(std::abs(got - want) <= 1e-14 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("integrated kernel remainders match composite quadrature") {
  const Medium m = Medium::from_lame(1.0, 1.0, 1.0, 2.0);
  const KernelScalars sc(m);
  for (double scale : {0.03, 0.4, 1.2}) {
    for (int upow : {0, 1, 2, 3}) {
      const std::array<cd, 10> got = sc.integrated_remainder(scale, upow);
      for (int k = 0; k < 10; ++k) {
        const cd want = dyadic_integral([&](double u) {
          return std::pow(u, upow) * to_array(sc.remainder(scale * u))[k];
        });
        // Above the expansion radius the oracle itself evaluates the
        // remainder by subtraction, which costs a few digits.
        CHECK(std::abs(got[k] - want) <= 1e-10 + 1e-12 * std::abs(want));
      }
    }
  }
  // Expansion validity guard: the transverse wavelength limits how long an
  // element this path may integrate over.
  CHECK_THROWS_AS(sc.integrated_remainder(2.0, 0), std::domain_error);
}
