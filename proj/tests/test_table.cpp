#include <doctest.h>

#include <cmath>
#include <sstream>

#include <omp.h>

#include "su11/kernels.hpp"
#include "su11/spectral.hpp"
#include "su11/table.hpp"

using namespace su11;

TEST_CASE("grid parsing") {
  const GridSpec g = GridSpec::parse("1e-3:100:6", true);
  const auto v = g.values();
  REQUIRE(v.size() == 6);
  CHECK(v.front() == 1e-3);
  CHECK(v.back() == 100.0);
  CHECK(v[1] == doctest::Approx(1e-2));
  const auto lin = GridSpec::parse("1:2:3", false).values();
  CHECK(lin == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(GridSpec::parse("5:5:1", true).values() == std::vector<double>{5.0});
  CHECK_THROWS_AS(GridSpec::parse("1:2", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("a:2:3", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("1:2:0", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("1:2:-3", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("2:1:3", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:3", true), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("1:2:3x", true), std::invalid_argument);
}

TEST_CASE("spectral table rows") {
  const std::vector<double> xs{0.5, 2.0, 20.0};
  const SpectralTable t = build_spectral_table(xs);
  REQUIRE(t.rows.size() == 3);
  for (const SpectralRow& r : t.rows) {
    const ScaleParams p = ScaleParams::from_omega(r.x);
    CHECK(r.x_tilde == doctest::Approx(0.25 * r.x));
    CHECK(r.F_quad == cdf_quadrature(r.x).value);
    CHECK(r.f_quad == pdf_quadrature(r.x));
    CHECK(r.F_derived == cdf_closed_derived(p.u));
    CHECK(r.F_paper_u == cdf_closed_paper_u(p.u));
    CHECK(r.F_paper_prop == cdf_closed_paper_prop(r.x_tilde));
    CHECK(r.f_paper == pdf_closed_paper(r.x_tilde));
  }
  CHECK_THROWS_AS(build_spectral_table(std::vector<double>{1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(build_spectral_table(std::vector<double>{0.0}), std::domain_error);
}

TEST_CASE("serial and parallel table and map kernels agree bitwise") {
  const std::vector<double> xs = GridSpec{1e-2, 1e3, 97, true}.values();
  const SpectralTable serial = build_spectral_table(xs, 1e-10, false);
  omp_set_num_threads(3);
  const SpectralTable par = build_spectral_table(xs, 1e-10, true);
  omp_set_num_threads(1);
  std::ostringstream a, b;
  serial.write_csv(a);
  par.write_csv(b);
  CHECK(a.str() == b.str());
  auto f = [](double x) { return std::log1p(x) * std::sin(x); };
  CHECK(kernels::map_serial(xs, f) == kernels::map_parallel(xs, f));
}

TEST_CASE("CSV round trip and errors") {
  const SpectralTable t = build_spectral_table(std::vector<double>{0.1, 1.0, 10.0});
  std::ostringstream out;
  t.write_csv(out);
  const std::string text = out.str();
  CHECK(text.rfind(std::string(SpectralTable::kHeader) + "\n", 0) == 0);
  std::istringstream in(text);
  const SpectralTable back = SpectralTable::read_csv(in);
  REQUIRE(back.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.rows[i].x == t.rows[i].x);
    CHECK(back.rows[i].f_quad == t.rows[i].f_quad);
    CHECK(back.rows[i].F_paper_prop == t.rows[i].F_paper_prop);
  }
  auto fails = [](const std::string& s) {
    std::istringstream is(s);
    try {
      SpectralTable::read_csv(is);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(fails("").find("line 1") != std::string::npos);
  CHECK(fails("x,y\n1,2\n").find("line 1") != std::string::npos);
  const std::string h = std::string(SpectralTable::kHeader) + "\n";
  CHECK(fails(h + "1,2,3\n").find("line 2") != std::string::npos);
  CHECK(fails(h + "1,2,3,4,5,6,7,abc\n").find("line 2") != std::string::npos);
  CHECK(fails(h + "2,0,0,0,0,0,0,0\n1,0,0,0,0,0,0,0\n").find("line 3") != std::string::npos);
  CHECK(fails(h + "1,2,3,4,5,6,7,8,9\n").find("line 2") != std::string::npos);
  CHECK(format_double(0.1) == "0.10000000000000001");
}
