#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su11/table.hpp"

namespace su11::cli {

/// Bad flags, unreadable config or unwritable output: exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::uint64_t seed = 42;
  int threads = 0;  // 0 keeps the OpenMP default
  std::string out = "-";
  std::string in;
  std::optional<std::size_t> samples;
  GridSpec grid;
  std::optional<double> tol;
  double fd_step = 1e-4;
  std::size_t trials = 1000;
  std::string weight = "uniform";
  std::string weight_table;
  std::vector<double> cuts{1e2, 1e3, 1e4};
  bool json = false;

  std::size_t samples_or(std::size_t fallback) const { return samples.value_or(fallback); }
  double tol_or(double fallback) const { return tol.value_or(fallback); }

  /// key=value lines that reproduce this configuration.
  std::string to_config_text() const;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Reads a flat key=value file. Blank lines and lines starting with '#' are
/// ignored; keys use the long flag names with '-' or '_'.
KeyValues read_config_file(const std::string& path);

/// Canonical flag for a config key: "fd_step" -> "--fd-step", "n" -> "--samples".
std::string flag_for_key(const std::string& key);

}  // namespace su11::cli
