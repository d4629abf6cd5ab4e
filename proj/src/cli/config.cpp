#include "ptweyl/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "ptweyl/cli/report_writer.hpp"

namespace ptweyl::cli {

namespace {

bool spectral_command(const std::string &c) { return c == "spectrum" || c == "verify"; }

std::string join(const std::vector<std::string> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

} // namespace

std::vector<std::string> default_checks() {
  return {"factorization", "pt-symmetry", "constraints", "intertwining", "spectral-shift", "pdfv-reduction"};
}

std::vector<std::string> known_checks() {
  auto v = default_checks();
  v.push_back("pdfv-transcription");
  v.push_back("spectrum");
  return v;
}

double RunConfig::resolved_l() const {
  if (grid_l) return *grid_l;
  if (command == "pdfv") return 5.0 / mu;
  return (spectral_command(command) ? 15.0 : 12.0) / mu;
}

int RunConfig::resolved_n() const {
  if (grid_n) return *grid_n;
  if (command == "pdfv") return 1001;
  return spectral_command(command) ? 3001 : 2001;
}

std::string RunConfig::resolved_format() const {
  if (!format.empty()) return format;
  return command == "verify" ? "report" : "csv";
}

Echo RunConfig::echo() const {
  Echo e;
  auto num = [](double v) { return format_double(v); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  e.push_back({"command", command});
  e.push_back({"a", num(a)});
  e.push_back({"mu", num(mu)});
  e.push_back({"k", num(k)});
  if (command == "spectrum") {
    e.push_back({"model", model});
    if (model == "u") {
      if (b1 || s) {
        e.push_back({"b1", b1 ? num(*b1) : "unset"});
        e.push_back({"s", s ? num(*s) : "unset"});
      } else {
        e.push_back({"member", member});
      }
    }
    e.push_back({"branch", branch});
    e.push_back({"nmax", std::to_string(nmax)});
    e.push_back({"v_f", num(v_f)});
    e.push_back({"imaginary_vf", flag(imaginary_vf)});
    e.push_back({"include_marginal", flag(include_marginal)});
    e.push_back({"all_levels", flag(all_levels)});
    e.push_back({"verify_inline", flag(verify_inline)});
  }
  if (command == "potential") {
    e.push_back({"potential", potential});
    if (potential == "u") e.push_back({"member", member});
  }
  if (command == "pdfv" || (command == "potential" && potential == "veff") || command == "verify") {
    e.push_back({"kind", kind});
    e.push_back({"alpha", num(alpha)});
    e.push_back({"beta", num(beta)});
    e.push_back({"constraint_set", std::to_string(constraint_set)});
    e.push_back({"which", std::to_string(which)});
  }
  if (command == "verify") {
    e.push_back({"checks", join(checks.empty() ? default_checks() : checks)});
    e.push_back({"perturb_b1", num(perturb_b1)});
  }
  if (command != "constraints") {
    e.push_back({"grid_l", num(resolved_l()) + (grid_l ? "" : " (default)")});
    e.push_back({"grid_n", std::to_string(resolved_n()) + (grid_n ? "" : " (default)")});
    e.push_back({"order", std::to_string(order)});
  }
  e.push_back({"format", resolved_format()});
  if (!config_path.empty()) e.push_back({"config", config_path});
  return e;
}

std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::string &help_text) {
  RunConfig cfg;
  CLI::App app{"PT-symmetric Dirac-Weyl models with hyperbolic magnetic fields", "ptweyl"};
  app.set_config("--config", "", "config file (TOML/INI keys = long option names); flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("command", cfg.command, "potential | spectrum | verify | constraints | pdfv")
      ->required()
      ->check(CLI::IsMember({"potential", "spectrum", "verify", "constraints", "pdfv"}));
  app.add_option("--a", cfg.a, "dimensionless field coupling");
  app.add_option("--mu", cfg.mu, "inverse length of the field profile");
  app.add_option("--k", cfg.k, "wavenumber along y");
  app.add_option("--vf", cfg.v_f, "Fermi velocity scale for Dirac energies");
  app.add_option("--model", cfg.model, "spectrum model")->check(CLI::IsMember({"v1", "v2", "u"}));
  app.add_option("--member", cfg.member, "U family member")
      ->check(CLI::IsMember({"equals_v1", "deepened", "half_minus", "half_plus"}));
  app.add_option("--b1", cfg.b1, "intertwiner coefficient B1 (with --s, overrides --member)");
  app.add_option("--s", cfg.s, "intertwiner coefficient S");
  app.add_option("--branch", cfg.branch, "k1 | k2 | both")->check(CLI::IsMember({"k1", "k2", "both"}));
  app.add_option("--nmax", cfg.nmax, "highest level index");
  app.add_flag("--imaginary-vf", cfg.imaginary_vf, "apply v_F -> i v_F to Dirac energies");
  app.add_flag("--include-marginal", cfg.include_marginal, "also emit threshold levels");
  app.add_flag("--all-levels", cfg.all_levels, "emit every level up to nmax");
  app.add_flag("--verify-inline", cfg.verify_inline, "match levels against the finite-difference oracle");
  app.add_option("--potential", cfg.potential, "v1 | v2 | u | veff")
      ->check(CLI::IsMember({"v1", "v2", "u", "veff"}));
  app.add_option("--kind", cfg.kind, "velocity ansatz kind")->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--alpha", cfg.alpha, "velocity ansatz alpha");
  app.add_option("--beta", cfg.beta, "velocity ansatz beta");
  app.add_option("--constraint-set", cfg.constraint_set, "1 | 2")->check(CLI::IsMember({1, 2}));
  app.add_option("--which", cfg.which, "effective potential index 1 | 2")->check(CLI::IsMember({1, 2}));
  app.add_option("--grid-l", cfg.grid_l, "grid half-width");
  app.add_option("--grid-n", cfg.grid_n, "grid points (odd)");
  app.add_option("--order", cfg.order, "stencil order 2 | 4")->check(CLI::IsMember({2, 4}));
  app.add_option("--checks", cfg.checks, "verify checks (comma separated)")->delimiter(',');
  app.add_option("--perturb-b1", cfg.perturb_b1, "add to B1 of the first constraint solution (negative control)");
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--format", cfg.format, "csv | report")->check(CLI::IsMember({"csv", "report"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }
  if (auto *opt = app.get_option_no_throw("--config"); opt && opt->count() > 0) cfg.config_path = opt->as<std::string>();
  validate(cfg);
  return cfg;
}

void validate(const RunConfig &c) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(c.a) || !finite(c.k)) throw UsageError("--a and --k must be finite");
  if (!(c.mu > 0.0) || !finite(c.mu)) throw UsageError("--mu must be > 0");
  if (!(c.v_f > 0.0)) throw UsageError("--vf must be > 0");
  if (c.nmax < 0) throw UsageError("--nmax must be >= 0");
  if (c.nmax > 12) throw UsageError("--nmax above the Rodrigues cap of 12");
  if (c.grid_l && !(*c.grid_l > 0.0)) throw UsageError("--grid-l must be > 0");
  if (c.grid_n && (*c.grid_n < 5 || *c.grid_n % 2 == 0)) throw UsageError("--grid-n must be odd and >= 5");
  if (c.b1.has_value() != c.s.has_value()) throw UsageError("--b1 and --s must be given together");
  if (c.alpha == 0.0) throw UsageError("--alpha must be non-zero");
  const auto known = known_checks();
  for (const auto &ch : c.checks)
    if (std::find(known.begin(), known.end(), ch) == known.end()) throw UsageError("unknown check '" + ch + "'");
}

} // namespace ptweyl::cli
