#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptweyl/cli/config.hpp"

namespace ptweyl::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  Echo parameters;
  std::vector<std::pair<std::string, double>> values;
  std::vector<int> grid_sizes;
  std::vector<double> convergence_ratios;
  std::string note;
};

CheckResult run_check(const std::string &name, const RunConfig &cfg);

} // namespace ptweyl::cli
