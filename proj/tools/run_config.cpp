#include "run_config.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

namespace su11::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string RunConfig::to_config_text() const {
  std::string text;
  auto line = [&](std::string_view key, const std::string& value) { text += fmt::format("{}={}\n", key, value); };
  line("command", command);
  line("seed", std::to_string(seed));
  line("threads", std::to_string(threads));
  line("out", out);
  if (!in.empty()) line("in", in);
  if (samples) line("samples", std::to_string(*samples));
  line("grid", fmt::format("{:.17g}:{:.17g}:{}", grid.min, grid.max, grid.points));
  line(grid.log ? "log" : "linear", "true");
  if (tol) line("tol", fmt::format("{:.17g}", *tol));
  line("fd-step", fmt::format("{:.17g}", fd_step));
  line("trials", std::to_string(trials));
  line("weight", weight);
  if (!weight_table.empty()) line("weight-table", weight_table);
  std::string cut_text;
  for (std::size_t i = 0; i < cuts.size(); ++i) cut_text += fmt::format("{}{:.17g}", i ? "," : "", cuts[i]);
  line("cuts", cut_text);
  line("json", json ? "true" : "false");
  return text;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  KeyValues kv;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key=value, got '{}'", path, line_no, line));
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", path, line_no));
    if (key == "config") throw ConfigError(fmt::format("{}:{}: config files cannot include other config files", path, line_no));
    kv.emplace_back(std::move(key), std::move(value));
  }
  return kv;
}

std::string flag_for_key(const std::string& key) {
  if (key == "n") return "--samples";
  std::string k = key;
  std::replace(k.begin(), k.end(), '_', '-');
  return "--" + k;
}

}  // namespace su11::cli
