#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptweyl::cli {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Echo = std::vector<std::pair<std::string, std::string>>;

struct RunConfig {
  std::string command;

  double a = 1.0;
  double mu = 1.0;
  double k = 0.0;
  double v_f = 1.0;

  // spectrum
  std::string model = "v1";          // v1 | v2 | u
  std::string member = "equals_v1";  // U family member when model = u
  std::optional<double> b1;
  std::optional<double> s;
  std::string branch = "both";       // k1 | k2 | both
  int nmax = 4;
  bool imaginary_vf = false;
  bool include_marginal = false;
  bool all_levels = false;
  bool verify_inline = false;

  // potential
  std::string potential = "v1";      // v1 | v2 | u | veff

  // pdfv
  std::string kind = "real";
  double alpha = 1.0;
  double beta = 1.0;
  int constraint_set = 1;
  int which = 2;

  // grid; unset values resolve per command
  std::optional<double> grid_l;
  std::optional<int> grid_n;
  int order = 2;

  // verify
  std::vector<std::string> checks;
  double perturb_b1 = 0.0;

  std::string out;
  std::string format;  // csv | report; empty resolves per command
  std::string config_path;

  double resolved_l() const;
  int resolved_n() const;
  std::string resolved_format() const;
  // Every effective setting, defaults resolved, in a fixed order.
  Echo echo() const;
};

std::vector<std::string> default_checks();
std::vector<std::string> known_checks();

// Parses argv. Returns nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::string &help_text);

void validate(const RunConfig &cfg);

} // namespace ptweyl::cli
