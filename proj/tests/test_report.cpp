#include <doctest.h>

#include <cmath>
#include <numbers>

#include "su11/verification.hpp"

using namespace su11;

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.add({"b.second", CheckStatus::pass, 1.0, 2.0});
  r.add({"a.first", CheckStatus::discrepancy, 3.0, 0.0});
  CheckResult step{"c.third", CheckStatus::fail, 0.0, 0.0};
  step.details["error_class"] = "step_size";
  r.add(step);
  CHECK_THROWS_AS(r.add({"a.first", CheckStatus::pass, 0.0, 0.0}), std::invalid_argument);
  CHECK(r.size() == 3);
  CHECK(r.count(CheckStatus::pass) == 1);
  CHECK(r.count(CheckStatus::discrepancy) == 1);
  CHECK(r.has_step_size_failure());
  CHECK(r.contains("b.second"));
  CHECK(r.at("a.first").value == 3.0);
  const nlohmann::json j = r.to_json();
  CHECK(j.begin().key() == "a.first");
  CHECK(j["a.first"]["status"] == "discrepancy");
  CHECK(r.dump().back() == '\n');
  CHECK(to_string(CheckStatus::fail) == "fail");
}

TEST_CASE("second-moment growth fit") {
  const SecondMomentGrowth g = second_moment_growth(std::vector<double>{1e2, 1e3, 1e4});
  CHECK(g.strictly_increasing);
  CHECK(g.relative_gap <= kSecondMomentGrowthTolerance);
  // Independent second difference from frozen E2 values.
  const double l = std::log(10.0);
  const double a = (3032.96436787284 - 2.0 * 1361.01601141340 + 366.923238235126) / (2.0 * l * l);
  CHECK(g.curvature_coefficient == doctest::Approx(a).epsilon(1e-8));
  CHECK_THROWS_AS(second_moment_growth(std::vector<double>{1.0, 2.0, 5.0}), std::invalid_argument);
  const LinearFit tail = density_tail_fit();
  CHECK(tail.slope > 0.0);
  CHECK(tail.r_squared > 0.999);
  const std::vector<double> xs{0.0, 1.0, 2.0}, ys{1.0, 3.0, 5.0};
  const LinearFit lf = least_squares(xs, ys);
  CHECK(lf.slope == doctest::Approx(2.0));
  CHECK(lf.intercept == doctest::Approx(1.0));
}

TEST_CASE("u-form mean in x_tilde units is 3 pi / 2") {
  CHECK(paper_u_form_mean_tilde() == doctest::Approx(1.5 * std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("discrepancy ledger") {
  const std::vector<CheckResult> ledger = discrepancy_ledger(VerificationConfig{});
  VerificationReport r;
  for (const CheckResult& c : ledger) r.add(c);
  CHECK(r.at("ledger.F_derived_vs_F_quad").status == CheckStatus::pass);
  CHECK(r.at("ledger.F_derived_vs_F_quad").value <= 1e-8);
  CHECK(r.at("ledger.F_paper_prop_vs_F_quad").status == CheckStatus::discrepancy);
  CHECK(r.at("ledger.F_paper_prop_vs_F_quad").details["F_paper_prop_limit_at_infinity"].get<double>() == 0.0);
  const CheckResult& u = r.at("ledger.F_paper_u_vs_F_quad");
  CHECK(u.status == CheckStatus::discrepancy);
  CHECK(u.details["F_paper_u_at_u"].get<double>() == doctest::Approx(0.0239).epsilon(1e-2));
  CHECK(std::abs(u.details["F_quad_at_u"].get<double>() - 0.0957) <= 1e-3);
  CHECK(r.at("ledger.mean_vs_paper").status == CheckStatus::discrepancy);
  CHECK(r.at("ledger.mean_vs_paper").value == doctest::Approx(16.0 * std::numbers::pi / 3.0).epsilon(1e-8));
  CHECK(r.at("ledger.small_x_exponent").status == CheckStatus::discrepancy);
  CHECK(r.at("ledger.small_x_exponent").value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.at("ledger.f_paper_vs_dF_paper_u").status == CheckStatus::pass);
  CHECK(r.at("ledger.total_mass").status == CheckStatus::pass);
  CHECK(r.at("ledger.second_moment_divergence").status == CheckStatus::pass);
  CHECK(r.at("ledger.gaussian_second_moment_plateau").status == CheckStatus::pass);
  CHECK(r.count(CheckStatus::fail) == 0);
  CHECK(r.count(CheckStatus::discrepancy) >= 2);
}
