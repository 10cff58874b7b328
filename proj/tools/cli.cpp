#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <omp.h>

#include "commands.hpp"

namespace su11::cli {

namespace {

using Handler = CommandOutput (*)(const RunConfig&);

struct Subcommand {
  const char* name;
  const char* help;
  Handler handler;
};

constexpr Subcommand kSubcommands[] = {
    {"spectrum", "Table of F and f on an x grid (CSV)", cmd_spectrum},
    {"sample", "Monte-Carlo omega samples with importance weights (CSV)", cmd_sample},
    {"verify", "Run every numerical check and the discrepancy ledger (JSON)", cmd_verify},
    {"moments", "Mean and truncated second moments (text or JSON)", cmd_moments},
    {"plot", "Density plot of a spectrum table (SVG)", cmd_plot},
    {"reweight", "Density and CDF under a phase-space weight (CSV)", cmd_reweight},
};

const std::set<std::string> kFlagOptions = {"--log", "--linear", "--json", "--print-config"};

struct Bindings {
  std::string grid_text = "1e-3:100:400";
  bool log = false;
  bool linear = false;
  bool print_config = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, Bindings& b) {
  sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "OpenMP threads; 0 keeps the runtime default")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", cfg.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_flag("--print-config", b.print_config, "Print the resolved configuration as key=value and exit");
}

void add_grid(CLI::App* sub, Bindings& b) {
  sub->add_option("--grid", b.grid_text, "min:max:points")->capture_default_str();
  auto* log = sub->add_flag("--log", b.log, "Log-spaced grid (default)");
  auto* lin = sub->add_flag("--linear", b.linear, "Linearly spaced grid");
  log->excludes(lin);
}

void add_weight(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--weight", cfg.weight, "uniform | exp | gaussian | custom")->capture_default_str();
  sub->add_option("--weight-table", cfg.weight_table, "CSV with header rho,weight (implies custom)");
}

void add_samples(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n,--samples", cfg.samples, "Monte-Carlo sample count");
}

bool user_passed(const std::vector<std::string>& args, const std::string& flag) {
  for (const std::string& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    if (flag == "--samples" && (a == "-n" || (a.rfind("-n", 0) == 0 && a.size() > 2 && a[2] != '-'))) return true;
    if ((flag == "--log" || flag == "--linear") && (a == "--log" || a == "--linear")) return true;
  }
  return false;
}

// Appends config entries the user did not give on the command line.
void apply_config(std::vector<std::string>& args, const KeyValues& kv, const CLI::App& app) {
  std::string chosen;
  for (const std::string& a : args) {
    if (!a.empty() && a[0] != '-') {
      chosen = a;
      break;
    }
  }
  for (const auto& [key, value] : kv) {
    if (key == "command" && chosen.empty()) {
      chosen = value;
      args.insert(args.begin(), value);
    }
  }
  for (const auto& [key, value] : kv) {
    if (key == "command") continue;
    const std::string flag = flag_for_key(key);
    bool known = false;
    for (const Subcommand& s : kSubcommands) known = known || app.get_subcommand(s.name)->get_option_no_throw(flag);
    if (!known) throw ConfigError(fmt::format("unknown config key '{}'", key));
    if (chosen.empty()) continue;
    const CLI::App* sub = nullptr;
    for (const Subcommand& s : kSubcommands) {
      if (chosen == s.name) sub = app.get_subcommand(s.name);
    }
    if (sub == nullptr || sub->get_option_no_throw(flag) == nullptr || user_passed(args, flag)) continue;
    if (kFlagOptions.count(flag)) {
      if (value == "true" || value == "1") {
        args.push_back(flag);
      } else if (value != "false" && value != "0") {
        throw ConfigError(fmt::format("config key '{}' expects true or false, got '{}'", key, value));
      }
      continue;
    }
    args.push_back(flag);
    args.push_back(value);
  }
}

std::vector<double> parse_cuts(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string cell = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cell.size()) throw ConfigError(fmt::format("--cuts: cannot parse '{}'", cell));
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError(fmt::format("cannot open output '{}' for writing", cfg.out));
  f << text;
  f.close();
  if (!f) throw ConfigError(fmt::format("failed writing '{}'", cfg.out));
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Bindings b;
  std::string cuts_text = "1e2,1e3,1e4";
  CLI::App app{"SU(1,1) bosonic ensemble: Poincare moment map and its spectral distribution", "su11"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> subs;
  for (const Subcommand& s : kSubcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, cfg, b);
    subs[s.name] = sub;
  }
  add_grid(subs["spectrum"], b);
  subs["spectrum"]->add_option("--tol", cfg.tol, "Absolute quadrature tolerance (default 1e-10)");
  add_samples(subs["sample"], cfg);
  add_weight(subs["sample"], cfg);
  add_samples(subs["verify"], cfg);
  subs["verify"]->add_option("--tol", cfg.tol, "Richardson residual tolerance (default 1e-5)");
  subs["verify"]->add_option("--fd-step", cfg.fd_step, "Base finite-difference step")->capture_default_str();
  subs["verify"]->add_option("--trials", cfg.trials, "Random trials per invariant check")->capture_default_str();
  add_samples(subs["moments"], cfg);
  add_weight(subs["moments"], cfg);
  subs["moments"]->add_option("--cuts", cuts_text, "Comma-separated truncation cuts")->capture_default_str();
  subs["moments"]->add_flag("--json", cfg.json, "JSON instead of text");
  subs["plot"]->add_option("--in", cfg.in, "Spectrum table CSV");
  add_grid(subs["reweight"], b);
  add_weight(subs["reweight"], cfg);

  try {
    std::vector<std::string> args;
    std::string config_path;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      const std::string& a = raw_args[i];
      if (a == "--config") {
        if (i + 1 >= raw_args.size()) throw ConfigError("--config needs a path");
        config_path = raw_args[++i];
      } else if (a.rfind("--config=", 0) == 0) {
        config_path = a.substr(9);
      } else {
        args.push_back(a);
      }
    }
    if (!config_path.empty()) apply_config(args, read_config_file(config_path), app);

    std::reverse(args.begin(), args.end());
    app.parse(args);

    const Subcommand* chosen = nullptr;
    for (const Subcommand& s : kSubcommands) {
      if (subs[s.name]->parsed()) chosen = &s;
    }
    cfg.command = chosen->name;
    try {
      cfg.grid = GridSpec::parse(b.grid_text, !b.linear);
      cfg.cuts = parse_cuts(cuts_text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (b.print_config) {
      out << cfg.to_config_text();
      return kExitOk;
    }
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    const CommandOutput result = chosen->handler(cfg);
    write_output(cfg, result.text, out);
    return result.exit_code;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    // ConfigError, invalid weights or grids and unreadable files alike.
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace su11::cli
