#include "su11/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace su11 {

WeightSpec WeightSpec::custom_table(std::vector<std::pair<double, double>> nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("custom weight table needs at least two nodes");
  if (nodes.front().first != 0.0) throw std::invalid_argument("custom weight table must start at rho = 0");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i].first) || !std::isfinite(nodes[i].second) || nodes[i].second < 0.0) {
      throw std::invalid_argument("custom weight table entries must be finite with nonnegative weight");
    }
    if (i > 0 && !(nodes[i].first > nodes[i - 1].first)) {
      throw std::invalid_argument("custom weight table rho values must be strictly increasing");
    }
  }
  const bool all_zero = std::all_of(nodes.begin(), nodes.end(), [](const auto& n) { return n.second == 0.0; });
  if (all_zero) throw std::invalid_argument("custom weight table is identically zero (not normalizable)");
  WeightSpec w(Kind::custom_table);
  w.table_ = std::move(nodes);
  return w;
}

WeightSpec WeightSpec::parse(std::string_view name) {
  if (name == "uniform") return uniform();
  if (name == "exp") return exp_distance();
  if (name == "gaussian") return gaussian_distance();
  throw std::invalid_argument("unknown weight '" + std::string(name) + "' (expected uniform, exp or gaussian)");
}

WeightSpec WeightSpec::load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight table '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "rho,weight") throw std::runtime_error(path + ":1: expected header 'rho,weight'");
  std::vector<std::pair<double, double>> nodes;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    double rho = 0.0;
    double weight = 0.0;
    char comma = 0;
    if (!(row >> rho >> comma >> weight) || comma != ',') {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    nodes.emplace_back(rho, weight);
  }
  return custom_table(std::move(nodes));
}

std::string WeightSpec::name() const {
  switch (kind_) {
    case Kind::uniform: return "uniform";
    case Kind::exp_distance: return "exp";
    case Kind::gaussian_distance: return "gaussian";
    case Kind::custom_table: return "custom";
  }
  return "unknown";
}

double WeightSpec::operator()(double rho) const {
  switch (kind_) {
    case Kind::uniform: return 1.0;
    case Kind::exp_distance: return std::exp(-rho);
    case Kind::gaussian_distance: return std::exp(-rho * rho);
    case Kind::custom_table: {
      if (rho >= table_.back().first) return table_.back().second;
      auto it = std::upper_bound(table_.begin(), table_.end(), rho,
                                 [](double r, const auto& node) { return r < node.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double lambda = (rho - lo.first) / (hi.first - lo.first);
      return lo.second + lambda * (hi.second - lo.second);
    }
  }
  return 0.0;
}

double WeightSpec::derivative(double rho) const {
  switch (kind_) {
    case Kind::uniform: return 0.0;
    case Kind::exp_distance: return -std::exp(-rho);
    case Kind::gaussian_distance: return -2.0 * rho * std::exp(-rho * rho);
    case Kind::custom_table: {
      if (rho >= table_.back().first) return 0.0;
      auto it = std::upper_bound(table_.begin(), table_.end(), rho,
                                 [](double r, const auto& node) { return r < node.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      return (hi.second - lo.second) / (hi.first - lo.first);
    }
  }
  return 0.0;
}

std::vector<double> WeightSpec::rho_breakpoints() const {
  switch (kind_) {
    case Kind::uniform: return {0.0};
    case Kind::exp_distance: return {0.0, 2.0, 8.0, 20.0, 80.0};
    case Kind::gaussian_distance: return {0.0, 1.0, 3.0, 7.0};
    case Kind::custom_table: {
      std::vector<double> bps;
      for (const auto& node : table_) bps.push_back(node.first);
      return bps;
    }
  }
  return {0.0};
}

}  // namespace su11
