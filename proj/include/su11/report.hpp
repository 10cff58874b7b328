#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace su11 {

struct VerificationConfig {
  std::uint64_t seed = 42;
  /// Base finite-difference step; Richardson pairs it with 2 * fd_step.
  double fd_step = 1e-4;
  /// Largest accepted Richardson residual, relative to max(1, |estimate|).
  double fd_tol = 1e-5;
  std::size_t mc_samples = 1'000'000;
  std::size_t random_trials = 1000;
  std::size_t cone_samples = 10000;
};

/// pass and fail refer to the artifact's own numerics; discrepancy marks a
/// quoted closed-form claim that the numerics contradict.
enum class CheckStatus { pass, fail, discrepancy };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double value = 0.0;
  double tolerance = 0.0;
  /// Extra measured values, grid description and provenance. The key
  /// "error_class" is set to "step_size" when a finite-difference estimate
  /// could not reach the configured tolerance.
  nlohmann::json details = nlohmann::json::object();

  bool is_step_size_failure() const;
};

/// Named checks, kept in lexicographic order so serialisation is stable.
class VerificationReport {
 public:
  /// Throws std::invalid_argument on a duplicate name.
  void add(CheckResult check);

  const std::map<std::string, CheckResult>& checks() const { return checks_; }
  const CheckResult& at(const std::string& name) const { return checks_.at(name); }
  bool contains(const std::string& name) const { return checks_.count(name) != 0; }
  std::size_t size() const { return checks_.size(); }
  std::size_t count(CheckStatus status) const;
  bool has_step_size_failure() const;

  /// {name: {status, value, tolerance, details}}.
  nlohmann::json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }

 private:
  std::map<std::string, CheckResult> checks_;
};

}  // namespace su11
