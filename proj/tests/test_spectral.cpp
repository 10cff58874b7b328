#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "su11/spectral.hpp"

using namespace su11;

// Reference values below were computed once at 30-40 significant digits
// from the exact fiber integral F(u) = 2/u^2 - 1 + 2(1-u^2)log(1-u^2)/u^4
// and frozen here.

TEST_CASE("Gauss-Kronrod integrator") {
  const QuadratureResult s = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-14, 0.0);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-14));
  const QuadratureResult r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12, 0.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-11);
  const QuadratureResult bp =
      integrate([](double x) { return std::abs(x - 0.3); }, std::vector<double>{0.0, 0.3, 1.0}, 1e-14, 0.0);
  CHECK(bp.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(bp.evaluations == 30);
  const QuadratureResult capped = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-300, 0.0, 8);
  CHECK_FALSE(capped.converged);
}

TEST_CASE("scale parameters") {
  const ScaleParams p = ScaleParams::from_u(0.5);
  CHECK(p.x == doctest::Approx(2.3094010767585030580).epsilon(1e-15));
  CHECK(p.x_tilde == doctest::Approx(p.x / 4.0));
  CHECK(p.rho == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  const ScaleParams q = ScaleParams::from_omega(p.x);
  CHECK(q.u == doctest::Approx(0.5).epsilon(1e-15));
  const ScaleParams far = ScaleParams::from_omega(1e12);
  CHECK(far.one_minus_u > 0.0);
  CHECK(far.one_minus_u == doctest::Approx(2.0 / (0.25e12 * 0.25e12) * 0.25).epsilon(1e-6).scale(0.0));
  CHECK(ScaleParams::from_rho(p.rho).x == doctest::Approx(p.x).epsilon(1e-14));
  CHECK_THROWS_AS(ScaleParams::from_omega(-1.0), std::domain_error);
  CHECK_THROWS_AS(ScaleParams::from_u(1.0), std::domain_error);
}

TEST_CASE("fiber radius") {
  CHECK(fiber_radius(0.5, ScaleParams::from_u(0.5).x) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(fiber_radius(0.0, ScaleParams::from_u(0.3).x) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(fiber_radius(0.2, 0.0) == 0.0);
  CHECK_THROWS_AS(fiber_radius(1.0, 1.0), std::domain_error);
}

TEST_CASE("cdf_quadrature against frozen references") {
  struct Ref {
    double u, F;
  };
  for (const Ref r : {Ref{0.1, 0.00335010067146}, Ref{0.5, 0.0956302611572577}, Ref{0.9, 0.507273497039739}}) {
    const QuadratureResult q = cdf_quadrature(ScaleParams::from_u(r.u).x);
    CHECK(q.converged);
    CHECK(std::abs(q.value - r.F) < 1e-10);
  }
  struct XRef {
    double x, F;
  };
  for (const XRef r : {XRef{1.0, 0.020205731859445636150}, XRef{10.0, 0.58465225475672423882},
                       XRef{100.0, 0.98256110933857965221}}) {
    CHECK(std::abs(cdf_quadrature(r.x).value - r.F) < 1e-10);
  }
  CHECK(cdf_quadrature(0.0).value == 0.0);
  CHECK_THROWS_AS(cdf_quadrature(-1.0), std::domain_error);
}

TEST_CASE("survival function keeps relative precision in the tail") {
  CHECK(survival_quadrature(1e4, 0.0, 1e-12).value ==
        doctest::Approx(4.687390299330342563e-6).epsilon(1e-9));
  CHECK(survival_quadrature(1e6, 0.0, 1e-12).value ==
        doctest::Approx(7.63469836611280060e-10).epsilon(1e-8));
  CHECK(survival_quadrature(0.0, 0.0, 1e-12).value == 1.0);
}

TEST_CASE("density against frozen references") {
  struct XRef {
    double x, f;
  };
  for (const XRef r : {XRef{1e-3, 4.166666406250014648e-5}, XRef{1.0, 0.03920127631038753024},
                       XRef{10.0, 0.03935500408984896634}, XRef{100.0, 2.854372027064076058e-4},
                       XRef{1000.0, 5.787706374148629325e-7}}) {
    CHECK(pdf_quadrature(r.x) == doctest::Approx(r.f).epsilon(1e-7));
    CHECK(pdf_closed_derived(r.x) == doctest::Approx(r.f).epsilon(1e-12));
  }
  CHECK_THROWS_AS(pdf_quadrature(0.0), std::domain_error);
}

TEST_CASE("derived closed form is the fiber integral") {
  for (double u : {0.01, 0.2, 0.31, 0.5, 0.75, 0.9, 0.99, 0.9999}) {
    const double x = ScaleParams::from_u(u).x;
    CHECK(std::abs(cdf_closed_derived(u) - cdf_quadrature(x).value) < 1e-9);
  }
  // Series and logarithmic branches meet continuously.
  const double u0 = std::sqrt(0.1);
  CHECK(cdf_closed_derived(std::nextafter(u0, 0.0)) == doctest::Approx(cdf_closed_derived(u0)).epsilon(1e-12));
  CHECK(cdf_closed_derived(1.0) == 1.0);
  CHECK(cdf_closed_derived(0.0) == 0.0);
}

TEST_CASE("transcribed closed forms") {
  // (2(1-u^2)/u^2) log(1-u^2) + 2 - u^2 at u = 1/2 equals u^2 F(u).
  CHECK(cdf_closed_paper_u(0.5) == doctest::Approx(0.023907565289315).epsilon(1e-12));
  CHECK(cdf_closed_paper_u(0.5) == doctest::Approx(0.25 * 0.0956302611572577).epsilon(1e-12));
  CHECK(cdf_closed_paper_prop(1.0) == doctest::Approx(0.5 - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(cdf_closed_paper_prop(0.0) == -1.0);
  CHECK(cdf_closed_paper_prop(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(pdf_closed_paper(1.0) == doctest::Approx(4.0 * std::log(2.0) - 2.5).epsilon(1e-13));
  // Series branch of the transcribed density meets the closed branch.
  CHECK(pdf_closed_paper(std::nextafter(0.1, 0.0)) == doctest::Approx(pdf_closed_paper(0.1)).epsilon(1e-10));
}

TEST_CASE("power series of the transcribed density") {
  CHECK(series_coefficient(2) == doctest::Approx(1.0 / 192.0).epsilon(1e-15));
  CHECK(series_coefficient(3) == doctest::Approx(-3.0 / 4096.0).epsilon(1e-15));
  CHECK_THROWS_AS(series_coefficient(1), std::invalid_argument);
  for (double x : {0.1, 0.5, 1.0, 2.0}) {
    CHECK(series_density(x) == doctest::Approx(0.25 * pdf_closed_paper(0.25 * x)).epsilon(1e-12));
  }
}
