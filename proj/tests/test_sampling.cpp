#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include <omp.h>

#include "su11/empirical.hpp"
#include "su11/sampling.hpp"
#include "su11/spectral.hpp"

using namespace su11;

TEST_CASE("weight specs") {
  CHECK(WeightSpec::parse("uniform").is_uniform());
  CHECK(WeightSpec::parse("exp")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(WeightSpec::parse("gaussian")(2.0) == doctest::Approx(std::exp(-4.0)));
  CHECK(WeightSpec::parse("exp").name() == "exp");
  CHECK_THROWS_AS(WeightSpec::parse("cauchy"), std::invalid_argument);
  CHECK(WeightSpec::gaussian_distance().derivative(0.5) == doctest::Approx(-std::exp(-0.25)));

  const WeightSpec t = WeightSpec::custom_table({{0.0, 1.0}, {2.0, 0.0}, {4.0, 0.5}});
  CHECK(t.name() == "custom");
  CHECK(t(1.0) == doctest::Approx(0.5));
  CHECK(t(3.0) == doctest::Approx(0.25));
  CHECK(t(10.0) == 0.5);
  CHECK(t.derivative(1.0) == doctest::Approx(-0.5));
  CHECK(t.derivative(5.0) == 0.0);
  CHECK_THROWS_AS(WeightSpec::custom_table({{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::custom_table({{0.5, 1.0}, {1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::custom_table({{0.0, 1.0}, {0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::custom_table({{0.0, -1.0}, {1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::custom_table({{0.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("weight table files") {
  const std::string path = "su11_weight_table_test.csv";
  {
    std::ofstream f(path);
    f << "rho,weight\n0,1\n1,0.25\n";
  }
  const WeightSpec w = WeightSpec::load_table(path);
  CHECK(w(0.5) == doctest::Approx(0.625));
  {
    std::ofstream f(path);
    f << "rho,weight\n0,1\n1;0.25\n";
  }
  CHECK_THROWS_AS(WeightSpec::load_table(path), std::runtime_error);
  {
    std::ofstream f(path);
    f << "r,w\n0,1\n";
  }
  CHECK_THROWS_AS(WeightSpec::load_table(path), std::runtime_error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(WeightSpec::load_table(path), std::runtime_error);
}

TEST_CASE("stream layout partitions the samples") {
  for (std::size_t total : {1u, 63u, 64u, 1000u, 12345u}) {
    const StreamLayout l{7, 64, total};
    std::size_t sum = 0;
    for (std::size_t s = 0; s < l.stream_count; ++s) {
      CHECK(l.stream_offset(s) == sum);
      sum += l.stream_size(s);
    }
    CHECK(sum == total);
  }
}

TEST_CASE("serial and parallel kernels give identical batches") {
  for (const WeightSpec& w : {WeightSpec::uniform(), WeightSpec::exp_distance()}) {
    const StreamLayout layout{42, 64, 20'001};
    const SampleBatch serial = kernels::mc_sample_serial(layout, w);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      const SampleBatch par = kernels::mc_sample_parallel(layout, w);
      CHECK(par.omega == serial.omega);
      CHECK(par.weight == serial.weight);
      CHECK(par.per_stream == serial.per_stream);
    }
  }
  omp_set_num_threads(1);
}

TEST_CASE("seeds and streams") {
  const SampleBatch a = mc_sample(1000, 42, WeightSpec::uniform());
  const SampleBatch b = mc_sample(1000, 42, WeightSpec::uniform());
  const SampleBatch c = mc_sample(1000, 43, WeightSpec::uniform());
  CHECK(a.omega == b.omega);
  CHECK(a.omega != c.omega);
  CHECK(a.size() == 1000);
  // Each stream is a prefix of a longer run of the same stream.
  const SampleBatch small = mc_sample(640, 5, WeightSpec::uniform());
  const SampleBatch large = mc_sample(6400, 5, WeightSpec::uniform());
  for (std::size_t i = 0; i < 10; ++i) CHECK(small.omega[3 * 10 + i] == large.omega[3 * 100 + i]);
  CHECK_THROWS_AS(mc_sample(0, 1, WeightSpec::uniform()), std::invalid_argument);
  CHECK(stream_engine(1, 0)() != stream_engine(1, 1)());
  CHECK(stream_engine(1, 0)() != stream_engine(2, 0)());
}

TEST_CASE("sample values and weights") {
  const SampleBatch u = mc_sample(5000, 9, WeightSpec::uniform());
  CHECK(std::all_of(u.weight.begin(), u.weight.end(), [](double w) { return w == 1.0; }));
  CHECK(std::all_of(u.omega.begin(), u.omega.end(), [](double x) { return x >= 0.0 && std::isfinite(x); }));
  const SampleBatch e = mc_sample(5000, 9, WeightSpec::exp_distance());
  CHECK(e.omega == u.omega);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(e.weight[i] > 0.0);
    CHECK(e.weight[i] <= 1.0);
    CHECK(e.weight[i] == doctest::Approx(std::exp(-2.0 * std::asinh(0.25 * e.omega[i]))).epsilon(1e-14));
  }
}

TEST_CASE("empirical CDF") {
  const std::vector<double> v{3.0, 1.0, 2.0, 2.0};
  const std::vector<double> w{1.0, 1.0, 1.0, 1.0};
  const EmpiricalCdf e(v, w);
  CHECK(e(0.5) == 0.0);
  CHECK(e(1.0) == 0.25);
  CHECK(e(2.0) == 0.75);
  CHECK(e(2.5) == 0.75);
  CHECK(e(3.0) == 1.0);
  CHECK(e.effective_sample_size() == doctest::Approx(4.0));
  const EmpiricalCdf weighted(std::vector<double>{1.0, 2.0}, std::vector<double>{3.0, 1.0});
  CHECK(weighted(1.0) == 0.75);
  CHECK(weighted.effective_sample_size() == doctest::Approx(16.0 / 10.0));
  CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{}, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{1.0}, std::vector<double>{0.0}), std::invalid_argument);

  // KS against the uniform model on a regular sample: exactly 1/n.
  std::vector<double> grid(10), ones(10, 1.0);
  for (int i = 0; i < 10; ++i) grid[i] = (i + 1) / 10.0;
  const EmpiricalCdf g(grid, ones);
  CHECK(ks_distance(g, g.points()) == doctest::Approx(0.1));
  CHECK(ks_distance(g, g) == 0.0);
  // Ties are one jump.
  CHECK(ks_distance(e, std::vector<double>{0.25, 0.75, 0.75, 1.0}) == doctest::Approx(0.5));
}

TEST_CASE("small Monte-Carlo run against the quadrature CDF") {
  const SampleBatch b = mc_sample(20'000, 42, WeightSpec::uniform());
  const double ks = ks_distance(b, [](double x) { return cdf_quadrature(x, 1e-8).value; });
  CHECK(ks < 1.628 / std::sqrt(20'000.0));
}
