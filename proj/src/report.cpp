#include "su11/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace su11 {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::discrepancy: return "discrepancy";
  }
  return "unknown";
}

bool CheckResult::is_step_size_failure() const {
  return status == CheckStatus::fail && details.contains("error_class") && details["error_class"] == "step_size";
}

void VerificationReport::add(CheckResult check) {
  const std::string name = check.name;
  if (!checks_.emplace(name, std::move(check)).second) {
    throw std::invalid_argument("VerificationReport: duplicate check '" + name + "'");
  }
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [status](const auto& kv) { return kv.second.status == status; }));
}

bool VerificationReport::has_step_size_failure() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const auto& kv) { return kv.second.is_step_size_failure(); });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, check] : checks_) {
    out[name] = {{"status", std::string(to_string(check.status))},
                 {"value", check.value},
                 {"tolerance", check.tolerance},
                 {"details", check.details}};
  }
  return out;
}

}  // namespace su11
