// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <fmt/format.h>
#include <json.hpp>

#include "su11/empirical.hpp"
#include "su11/ledger.hpp"
#include "su11/lemmas.hpp"
#include "su11/moment_map.hpp"
#include "su11/reweight.hpp"
#include "su11/sampling.hpp"
#include "su11/spectral.hpp"
#include "su11/verification.hpp"

namespace fs = std::filesystem;
using namespace su11;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& measured) {
  fmt::print("[{}] criterion {}: {} ({})\n", ok ? "PASS" : "FAIL", id, title, measured);
  std::fflush(stdout);
  if (!ok) ++failures;
}

int shell(const std::string& args, const fs::path& out) {
  const std::string cmd = fmt::format("\"{}\" {} --out \"{}\" 2>/dev/null", SU11_CLI, args, out.string());
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const SampleBatch b = mc_sample(1'000'000, 42, WeightSpec::uniform());
  const double ks = ks_distance(b, [](double x) { return cdf_quadrature(x).value; });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "MC empirical CDF vs cdf_quadrature", ks < 2e-3 && secs < 60.0,
         fmt::format("KS {:.3e} < 2e-3, n 1e6, seed 42, {:.1f} s < 60 s", ks, secs));
}

void criterion2() {
  double worst = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double t = 0.1 * k;
    const FdEstimate fd = potential_moment_component(slice_point(t), LieVector::xi(), 1e-4);
    worst = std::max(worst, std::abs(fd.value - mu_slice(t)));
  }
  const CheckResult c = slice_formula_fd_check(VerificationConfig{});
  worst = std::max(worst, c.value);
  report(2, "FD moment map along the slice vs 8t/(1-t^2)", worst <= 1e-6 && c.status == CheckStatus::pass,
         fmt::format("max |error| {:.3e} <= 1e-6 at t = 0.1..0.9", worst));
}

void criterion3() {
  const CheckResult c = cone_containment_check(VerificationConfig{});
  report(3, "cone containment", c.status == CheckStatus::pass,
         fmt::format("{} off-diagonal points, {} outside class, max diagonal norm {:.1e} < 1e-12",
                     c.details["off_diagonal_samples"].get<std::size_t>(), c.details["not_in_expected_class"].get<std::size_t>(),
                     c.details["max_diagonal_norm"].get<double>()));
}

void criterion4() {
  const CheckResult c = equivariance_check(VerificationConfig{});
  report(4, "equivariance", c.status == CheckStatus::pass && c.details["trials"] == 1000,
         fmt::format("max norm {:.3e} < 1e-9 over 1000 (g, p)", c.value));
}

void criterion5() {
  const VerificationConfig cfg;
  const CheckResult grid = psh_grid_check(cfg);
  const CheckResult mixed = psh_mixed_along_l_check(cfg);
  report(5, "strict plurisubharmonicity", grid.status == CheckStatus::pass && mixed.status == CheckStatus::pass,
         fmt::format("min eigenvalue {:.4e} > 0 on 20x20 grid, mixed entry on L {:.3e} < 1e-5", grid.value, mixed.value));
}

void criterion6(const fs::path& dir) {
  const fs::path out = dir / "verify.json";
  const int code = shell("verify", out);
  bool ok = code == 0;
  std::string measured = fmt::format("exit {}", code);
  try {
    const nlohmann::json j = nlohmann::json::parse(slurp(out));
    std::size_t discrepancies = 0;
    for (const auto& [name, c] : j.items()) discrepancies += c["status"] == "discrepancy";
    const auto& derived = j.at("ledger.F_derived_vs_F_quad");
    const auto& prop = j.at("ledger.F_paper_prop_vs_F_quad");
    const auto& uform = j.at("ledger.F_paper_u_vs_F_quad");
    const auto& mean = j.at("ledger.mean_vs_paper");
    const auto& expo = j.at("ledger.small_x_exponent");
    const double fq = uform["details"]["F_quad_at_u"].get<double>();
    const double fp = uform["details"]["F_paper_u_at_u"].get<double>();
    ok = ok && derived["status"] == "pass" && derived["value"].get<double>() <= 1e-8;
    ok = ok && prop["status"] == "discrepancy" && prop["details"]["F_paper_prop_limit_at_infinity"].get<double>() != 1.0;
    ok = ok && uform["status"] == "discrepancy" && std::abs(fq - 0.0957) <= 1e-3 && std::abs(fp - 0.0239) <= 1e-3;
    ok = ok && mean.contains("value") && mean["details"].contains("paper_claim") && mean["status"] != "fail";
    ok = ok && expo.contains("value") && expo["details"]["paper_exponent"] == 3.0 && expo["status"] != "fail";
    ok = ok && discrepancies >= 2;
    measured = fmt::format(
        "exit {}, {} discrepancies; F_derived {:.1e}; F_prop(inf) {}; u=0.5 paper {:.4f} vs quad {:.4f}; mean {:.6f} "
        "[{}]; small-x slope {:.4f} [{}]",
        code, discrepancies, derived["value"].get<double>(), prop["details"]["F_paper_prop_limit_at_infinity"].get<double>(), fp,
        fq, mean["value"].get<double>(), mean["status"].get<std::string>(), expo["value"].get<double>(),
        expo["status"].get<std::string>());
  } catch (const std::exception& e) {
    ok = false;
    measured += fmt::format(", unreadable report: {}", e.what());
  }
  report(6, "discrepancy ledger via verify", ok, measured);
}

void criterion7() {
  const SecondMomentGrowth g = second_moment_growth(std::vector<double>{1e2, 1e3, 1e4});
  report(7, "second-moment divergence",
         g.strictly_increasing && g.relative_gap <= kSecondMomentGrowthTolerance,
         fmt::format("E2 = {:.4f}, {:.4f}, {:.4f}; log^2 coefficient {:.4f} vs tail c/2 {:.4f}, gap {:.2e} <= 0.2",
                     g.values[0], g.values[1], g.values[2], g.curvature_coefficient, g.tail_coefficient, g.relative_gap));
}

void criterion8(const fs::path& dir) {
  const fs::path table = dir / "table.csv";
  shell("spectrum --grid 1e-3:1e2:200", table);
  const std::string plot = "plot --in \"" + table.string() + "\"";
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"spectrum --grid 1e-3:1e2:200", "csv"},
      {"sample -n 100000 --weight exp", "csv"},
      {"reweight --grid 1e-2:1e3:100 --weight exp", "csv"},
      {"moments -n 100000 --json", "json"},
      {"verify -n 100000", "json"},
      {plot, "svg"},
  };
  bool ok = true;
  std::size_t compared = 0;
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    std::string first;
    for (const std::string threads : {"", "1", "8"}) {
      const fs::path out = dir / fmt::format("det_{}_t{}.{}", i, threads.empty() ? "default" : threads, cmds[i].second);
      const int code = shell(cmds[i].first + (threads.empty() ? "" : " --threads " + threads), out);
      const std::string bytes = slurp(out);
      ok = ok && code == 0 && !bytes.empty();
      if (first.empty()) {
        first = bytes;
        const fs::path again = dir / fmt::format("det_{}_repeat.{}", i, cmds[i].second);
        shell(cmds[i].first, again);
        ok = ok && slurp(again) == first;
      } else {
        ok = ok && bytes == first;
      }
      ++compared;
    }
  }
  report(8, "byte-identical CLI output", ok,
         fmt::format("{} commands (CSV, JSON, SVG), repeated and at --threads 1 vs 8, {} runs compared", cmds.size(), compared));
}

void criterion9() {
  std::size_t mismatches = 0;
  const ReweightedDistribution uni(WeightSpec::uniform());
  for (int i = 0; i <= 50; ++i) {
    const double x = 1e-3 * std::pow(10.0, i / 10.0);
    if (uni.density(x) != pdf_quadrature(x)) ++mismatches;
  }
  const WeightSpec w = WeightSpec::exp_distance();
  const SampleBatch b = mc_sample(1'000'000, 43, w);
  const EmpiricalCdf ecdf(b);
  const ReweightedDistribution dist(w);
  const double ks = ks_distance(ecdf, dist.cdf_at_sorted(ecdf.points()));
  report(9, "reweighting identity and e^{-rho} KS", mismatches == 0 && ks < 3e-3,
         fmt::format("uniform mismatches {} of 51; exp-weighted KS {:.3e} < 3e-3 (n 1e6, ESS {:.0f})", mismatches, ks,
                     ecdf.effective_sample_size()));
}

}  // namespace

int main() {
  const fs::path dir(SU11_TEST_TMP);
  fs::create_directories(dir);
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6(dir);
  criterion7();
  criterion8(dir);
  criterion9();
  fmt::print("{} of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
