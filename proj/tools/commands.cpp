#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "su11/kernels.hpp"
#include "su11/ledger.hpp"
#include "su11/moments.hpp"
#include "su11/reweight.hpp"
#include "su11/sampling.hpp"
#include "su11/spectral.hpp"
#include "su11/verification.hpp"

namespace su11::cli {

namespace {

constexpr double kPaperMeanClaim = 1.5 * std::numbers::pi;
constexpr double kDefaultVerifyTol = 1e-5;
constexpr std::size_t kDefaultMcSamples = 1'000'000;
constexpr double kPlateauTol = 1e-6;

std::string g17(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

WeightSpec resolve_weight(const RunConfig& cfg) {
  if (!cfg.weight_table.empty()) {
    if (cfg.weight != "uniform" && cfg.weight != "custom") {
      throw ConfigError("--weight-table conflicts with --weight " + cfg.weight);
    }
    return WeightSpec::load_table(cfg.weight_table);
  }
  if (cfg.weight == "custom") throw ConfigError("--weight custom needs --weight-table");
  return WeightSpec::parse(cfg.weight);
}

CommandOutput cmd_spectrum(const RunConfig& cfg) {
  const std::vector<double> xs = cfg.grid.values();
  const SpectralTable table = build_spectral_table(xs, cfg.tol_or(kDefaultCdfTolerance));
  std::ostringstream os;
  table.write_csv(os);
  return {os.str(), kExitOk};
}

CommandOutput cmd_sample(const RunConfig& cfg) {
  const std::size_t n = cfg.samples_or(1000);
  if (n == 0) throw ConfigError("sample: -n must be at least 1");
  const SampleBatch batch = mc_sample(n, cfg.seed, resolve_weight(cfg));
  std::string text = "omega,weight\n";
  text.reserve(n * 44);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    text += fmt::format("{:.17g},{:.17g}\n", batch.omega[i], batch.weight[i]);
  }
  return {std::move(text), kExitOk};
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  VerificationConfig vc;
  vc.seed = cfg.seed;
  vc.fd_step = cfg.fd_step;
  vc.fd_tol = cfg.tol_or(kDefaultVerifyTol);
  vc.mc_samples = cfg.samples_or(kDefaultMcSamples);
  vc.random_trials = cfg.trials;
  if (!(vc.fd_step > 0.0) || !(vc.fd_tol > 0.0)) throw ConfigError("verify: --fd-step and --tol must be positive");
  if (vc.mc_samples < 2 || vc.random_trials == 0) throw ConfigError("verify: --samples >= 2 and --trials >= 1 required");
  const VerificationReport report = run_all(vc);
  int code = kExitOk;
  if (report.has_step_size_failure()) {
    code = kExitConfigError;
  } else if (report.count(CheckStatus::fail) > 0) {
    code = kExitCheckFailure;
  }
  return {report.dump(), code};
}

CommandOutput cmd_moments(const RunConfig& cfg) {
  const WeightSpec weight = resolve_weight(cfg);
  const std::size_t n = cfg.samples_or(kDefaultMcSamples);
  if (n < 2) throw ConfigError("moments: -n must be at least 2");
  std::vector<double> cuts = cfg.cuts;
  if (cuts.empty()) throw ConfigError("moments: --cuts must list at least one cut");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!(cuts[i] > 0.0) || !std::isfinite(cuts[i]) || (i > 0 && !(cuts[i] > cuts[i - 1]))) {
      throw ConfigError("moments: --cuts must be positive, finite and increasing");
    }
  }

  const MeanQuadrature quad = mean_quadrature(weight);
  const MomentEstimate mc = mean_mc(mc_sample(n, cfg.seed, weight));
  const std::vector<MomentEstimate> e2 = truncated_second_moments(weight, cuts);
  const bool increasing = std::adjacent_find(e2.begin(), e2.end(), [](const auto& a, const auto& b) {
                            return !(b.value > a.value);
                          }) == e2.end();
  const bool finite =
      e2.size() >= 2 && std::abs(e2.back().value - e2[e2.size() - 2].value) <= kPlateauTol * std::abs(e2.back().value);

  nlohmann::json j;
  j["weight"] = weight.name();
  j["seed"] = cfg.seed;
  j["samples"] = n;
  j["mean"]["quadrature"] = {{"value", quad.value},
                             {"error_bound", quad.error()},
                             {"cut", quad.cut},
                             {"tail_estimate", quad.tail_estimate}};
  j["mean"]["mc"] = {{"value", mc.value}, {"standard_error", mc.error}};
  std::string claim_status;
  if (weight.is_uniform()) {
    claim_status = std::abs(quad.value - kPaperMeanClaim) > 3.0 * quad.error() ? "discrepancy" : "match";
    j["mean"]["paper_claim"] = {{"value", kPaperMeanClaim}, {"status", claim_status}};
  } else {
    j["mean"]["paper_claim"] = nullptr;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    rows.push_back({{"cut", cuts[i]}, {"value", e2[i].value}, {"error", e2[i].error}});
  }
  j["truncated_second_moment"] = rows;
  j["second_moment"] = {{"finite", finite},
                        {"value", finite ? nlohmann::json(e2.back().value) : nlohmann::json(nullptr)},
                        {"strictly_increasing", increasing},
                        {"log2_coefficient", nullptr},
                        {"tail_coefficient", nullptr}};
  const bool geometric = cuts.size() == 3 && std::abs(cuts[1] / cuts[0] - cuts[2] / cuts[1]) <= 1e-12 * cuts[2] / cuts[1];
  SecondMomentGrowth growth;
  if (weight.is_uniform() && geometric) {
    growth = second_moment_growth(cuts);
    j["second_moment"]["log2_coefficient"] = growth.curvature_coefficient;
    j["second_moment"]["tail_coefficient"] = growth.tail_coefficient;
  }

  if (cfg.json) return {j.dump(2) + "\n", kExitOk};

  std::string t;
  t += fmt::format("weight {}\nseed {}\nsamples {}\n", weight.name(), cfg.seed, n);
  t += fmt::format("mean quadrature {} +- {}\n", g17(quad.value), g17(quad.error()));
  t += fmt::format("mean mc {} +- {}\n", g17(mc.value), g17(mc.error));
  if (weight.is_uniform()) {
    t += fmt::format("mean paper_claim {} vs computed {} [{}]\n", g17(kPaperMeanClaim), g17(quad.value), claim_status);
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    t += fmt::format("E2 cut {} = {} +- {}\n", g17(cuts[i]), g17(e2[i].value), g17(e2[i].error));
  }
  if (finite) {
    t += fmt::format("second moment finite {}\n", g17(e2.back().value));
  } else {
    t += fmt::format("second moment divergent (strictly increasing: {})\n", increasing ? "yes" : "no");
  }
  if (weight.is_uniform() && geometric) {
    t += fmt::format("log^2 coefficient {} vs tail prediction {}\n", g17(growth.curvature_coefficient),
                     g17(growth.tail_coefficient));
  }
  return {std::move(t), kExitOk};
}

CommandOutput cmd_plot(const RunConfig& cfg) {
  if (cfg.in.empty()) throw ConfigError("plot: --in <table.csv> is required");
  std::ifstream in(cfg.in);
  if (!in) throw ConfigError(fmt::format("plot: cannot open '{}'", cfg.in));
  SpectralTable table;
  try {
    table = SpectralTable::read_csv(in);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("plot: {}: {}", cfg.in, e.what()));
  }
  return {render_density_svg(table), kExitOk};
}

CommandOutput cmd_reweight(const RunConfig& cfg) {
  const WeightSpec weight = resolve_weight(cfg);
  const ReweightedDistribution dist(weight);
  const std::vector<double> xs = cfg.grid.values();
  const std::vector<double> base = kernels::map_parallel(xs, [](double x) { return pdf_quadrature(x); });
  const std::vector<double> dens = kernels::map_parallel(xs, [&](double x) { return dist.density(x); });
  const std::vector<double> cdf = dist.cdf_at_sorted(xs);
  std::string t = "x,rho,weight,f_base,f_weighted,F_weighted\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double rho = 2.0 * std::asinh(0.25 * xs[i]);
    t += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", xs[i], rho, weight(rho), base[i], dens[i],
                     cdf[i]);
  }
  return {std::move(t), kExitOk};
}

}  // namespace su11::cli
