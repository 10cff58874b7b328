#include <doctest.h>

#include <cmath>
#include <numbers>

#include "su11/moments.hpp"
#include "su11/reweight.hpp"
#include "su11/spectral.hpp"

using namespace su11;

// Frozen high-precision values from the exact fiber-integral CDF.

TEST_CASE("mean of omega") {
  const MeanQuadrature m = mean_quadrature();
  CHECK(m.value == doctest::Approx(16.0 * std::numbers::pi / 3.0).epsilon(1e-9));
  CHECK(std::abs(m.value - 16.0 * std::numbers::pi / 3.0) <= m.error());
  CHECK(m.tail_bound >= m.tail_estimate);
  CHECK(m.cut == 1e8);
  // Far from the transcribed 3 pi / 2.
  CHECK(std::abs(m.value - 1.5 * std::numbers::pi) > 1e3 * m.error());
}

TEST_CASE("weighted mean") {
  const MeanQuadrature m = mean_quadrature(WeightSpec::exp_distance());
  CHECK(m.value == doctest::Approx(3.72157278453740965).epsilon(1e-8));
}

TEST_CASE("truncated second moments diverge like log^2") {
  const std::vector<double> cuts{1e2, 1e3, 1e4};
  const std::vector<MomentEstimate> e2 = truncated_second_moments(WeightSpec::uniform(), cuts);
  CHECK(e2[0].value == doctest::Approx(366.923238235126).epsilon(1e-8));
  CHECK(e2[1].value == doctest::Approx(1361.01601141340).epsilon(1e-8));
  CHECK(e2[2].value == doctest::Approx(3032.96436787284).epsilon(1e-8));
  CHECK(truncated_moment(WeightSpec::uniform(), 2, 10.0).value == doctest::Approx(18.3734445283281078).epsilon(1e-8));
  // The first moment converges to the mean.
  CHECK(truncated_moment(WeightSpec::uniform(), 1, 1e6).value <= mean_quadrature().value);
  CHECK_THROWS_AS(truncated_moment(WeightSpec::uniform(), 0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(truncated_moment(WeightSpec::uniform(), 2, -1.0), std::domain_error);
}

TEST_CASE("light-tailed weights give a finite second moment") {
  const std::vector<double> cuts{1e2, 1e3, 1e4};
  const auto e2 = truncated_second_moments(WeightSpec::gaussian_distance(), cuts);
  CHECK(e2[2].value == doctest::Approx(e2[1].value).epsilon(1e-9));
}

TEST_CASE("Monte-Carlo mean") {
  SampleBatch b;
  b.omega = {1.0, 2.0, 3.0};
  b.weight = {1.0, 1.0, 2.0};
  const MomentEstimate m = mean_mc(b);
  CHECK(m.value == doctest::Approx(2.25));
  CHECK(m.error > 0.0);
  CHECK_THROWS_AS(mean_mc(SampleBatch{}), std::invalid_argument);
}

TEST_CASE("reweighting identity for the uniform weight") {
  const ReweightedDistribution uni(WeightSpec::uniform());
  CHECK(uni.normalization() == 1.0);
  const std::vector<double> xs{1e-3, 0.1, 1.0, 7.9, 8.1, 50.0, 1e3};
  for (double x : xs) {
    CHECK(uni.density(x) == pdf_quadrature(x));
    CHECK(uni.cdf(x) == cdf_quadrature(x).value);
  }
  const auto serial = uni.cdf_at_sorted(xs, false);
  const auto par = uni.cdf_at_sorted(xs, true);
  CHECK(serial == par);
}

TEST_CASE("exponential reweighting against frozen references") {
  const ReweightedDistribution d(WeightSpec::exp_distance());
  CHECK(d.normalization() == doctest::Approx(0.116720852038897008744).epsilon(1e-10));
  CHECK(d.cdf(10.0) == doctest::Approx(0.951791083988005116545).epsilon(1e-9));
  CHECK(d.cdf(0.0) == 0.0);
  CHECK(d.cdf(1e8) == doctest::Approx(1.0).epsilon(1e-10));
  const double x = 3.0;
  const double rho = 2.0 * std::asinh(0.75);
  CHECK(d.density(x) == doctest::Approx(pdf_quadrature(x) * std::exp(-rho) / d.normalization()).epsilon(1e-15));
  CHECK(reweight_density(WeightSpec::exp_distance(), x) == d.density(x));

  // Accumulated CDF at sorted points matches pointwise evaluation.
  const std::vector<double> xs{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4};
  const auto acc = d.cdf_at_sorted(xs, true);
  CHECK(acc == d.cdf_at_sorted(xs, false));
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(acc[i] == doctest::Approx(d.cdf(xs[i])).epsilon(1e-10).scale(1.0));
  CHECK_THROWS_AS(d.cdf_at_sorted(std::vector<double>{2.0, 1.0}), std::invalid_argument);

  // Density integrates to the CDF.
  const QuadratureResult q = integrate([&](double y) { return d.density(y); }, 0.5, 10.0, 1e-9, 1e-9);
  CHECK(q.value == doctest::Approx(d.cdf(10.0) - d.cdf(0.5)).epsilon(1e-6));
}

TEST_CASE("custom table weight") {
  const WeightSpec w = WeightSpec::custom_table({{0.0, 1.0}, {1.0, 0.5}, {3.0, 0.0}});
  const ReweightedDistribution d(w);
  CHECK(d.normalization() > 0.0);
  CHECK(d.cdf(1e6) == doctest::Approx(1.0).epsilon(1e-9));
  // Zero weight beyond rho = 3: the CDF is flat there.
  const double x3 = 4.0 * std::sinh(1.5);
  CHECK(d.cdf(x3) == doctest::Approx(1.0).epsilon(1e-9));
}
