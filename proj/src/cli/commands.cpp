#include "ptweyl/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ptweyl/cli/checks.hpp"
#include "ptweyl/cli/report_writer.hpp"
#include "ptweyl/errors.hpp"
#include "ptweyl/intertwine.hpp"
#include "ptweyl/model_core.hpp"
#include "ptweyl/nu_solver.hpp"
#include "ptweyl/oracle.hpp"
#include "ptweyl/pdfv.hpp"

namespace ptweyl::cli {

namespace {

void emit(std::ostream &os, const RunConfig &cfg, const Table &t, Json extra = Json::object()) {
  if (cfg.resolved_format() == "csv") {
    write_csv(os, cfg.echo(), t);
    return;
  }
  extra["rows"] = table_to_json(t);
  write_report(os, cfg.command, cfg.echo(), extra);
}

// (b1, s) from explicit flags or from the named family member.
IntertwinerCoeffs member_coeffs(const RunConfig &cfg) {
  if (cfg.b1 && cfg.s) return make_coeffs(*cfg.b1, *cfg.s, cfg.a, cfg.mu);
  for (const auto &m : u_family_members(cfg.a, cfg.mu))
    if (m.label == cfg.member) return make_coeffs(m.b1, m.s, cfg.a, cfg.mu);
  throw UsageError("no U family member '" + cfg.member + "' for these parameters");
}

NUProblem spectrum_problem(const RunConfig &cfg) {
  if (cfg.model == "v1") return NUProblem::from_couplings(-cfg.a * cfg.a, -I * cfg.a * cfg.mu, cfg.mu);
  if (cfg.model == "v2") return NUProblem::from_couplings(-cfg.a * cfg.a, I * cfg.a * cfg.mu, cfg.mu);
  const auto c = member_coeffs(cfg);
  const auto [a1, a2] = scarf_couplings_from_intertwiner(c.b1, c.s, cfg.a, cfg.mu);
  return NUProblem::from_couplings(a1, a2, cfg.mu);
}

std::vector<Branch> branches(const RunConfig &cfg) {
  if (cfg.branch == "both") return {Branch::k1, Branch::k2};
  return {branch_from_string(cfg.branch)};
}

PdfvAnsatz pdfv_ansatz(const RunConfig &cfg) {
  return constrained_ansatz(ansatz_kind_from_string(cfg.kind), cfg.alpha, cfg.beta, cfg.mu,
                            cfg.constraint_set - 1, cfg.k);
}

} // namespace

int run_potential(const RunConfig &cfg, std::ostream &os) {
  const Grid g(cfg.resolved_l(), cfg.resolved_n());
  Potential u;
  if (cfg.potential == "v1" || cfg.potential == "v2") {
    const ScarfModel m{cfg.a, cfg.mu};
    m.validate();
    const bool first = cfg.potential == "v1";
    u = [m, first](double x) {
      const auto p = scarf2_potentials(m, x);
      return first ? p.first : p.second;
    };
  } else if (cfg.potential == "u") {
    u = u_family_potential(member_coeffs(cfg), cfg.a, cfg.mu);
  } else {
    const auto ans = pdfv_ansatz(cfg);
    const int which = cfg.which;
    u = [ans, which](double x) { return eff_potential_definitional(ans, which, x); };
  }
  Table t{{"x", "re_v", "im_v"}, {}};
  for (double x : g.points()) {
    const cplx v = u(x);
    t.rows.push_back({x, v.real(), v.imag()});
  }
  emit(os, cfg, t);
  return kPass;
}

int run_spectrum(const RunConfig &cfg, std::ostream &os) {
  const auto p = spectrum_problem(cfg);
  Table t{{"branch", "n", "re_energy", "im_energy", "re_dirac", "im_dirac", "normalizable", "marginal"}, {}};
  if (cfg.verify_inline) {
    t.columns.insert(t.columns.end(), {"re_numeric", "im_numeric", "abs_err"});
  }
  CVector numeric;
  if (cfg.verify_inline) {
    OracleOptions opts;
    opts.order = cfg.order;
    numeric = bound_spectrum([&](double x) { return p.potential(x); }, Grid(cfg.resolved_l(), cfg.resolved_n()),
                             opts);
  }
  for (Branch b : branches(cfg)) {
    const int levels = normalizable_levels(p, b);
    const int marginal = marginal_level(p, b);
    for (int n = 0; n <= cfg.nmax; ++n) {
      const bool norm = n < levels;
      const bool marg = n == marginal;
      if (!cfg.all_levels && !norm && !(cfg.include_marginal && marg)) continue;
      const cplx e = nu_energy(p, b, n);
      const cplx d = dirac_energy(e, cfg.v_f, cfg.imaginary_vf).first;
      std::vector<Cell> row{to_string(b), (long long)n, e.real(), e.imag(), d.real(), d.imag(), norm, marg};
      if (cfg.verify_inline) {
        const auto rep = match_spectra({e}, numeric, 2e-3);
        const auto &en = rep.entries.front();
        const double nan = std::nan("");
        row.insert(row.end(), {en.matched ? en.numeric.real() : nan, en.matched ? en.numeric.imag() : nan,
                               en.matched ? en.abs_err : nan});
      }
      t.rows.push_back(std::move(row));
    }
  }
  emit(os, cfg, t);
  return kPass;
}

int run_constraints(const RunConfig &cfg, std::ostream &os) {
  ScarfModel{cfg.a, cfg.mu}.validate();
  Table t{{"b1", "s", "label", "a1_coeff_re", "a2_coeff_im", "residual_product", "residual_sum", "degenerate"}, {}};
  const auto sols = solve_bs_constraints(cfg.a, cfg.mu);
  const auto members = u_family_members(cfg.a, cfg.mu);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto &c = sols[i];
    const auto &m = members[i];
    t.rows.push_back({c.b1.real(), c.s.real(), m.label, m.a1_coeff.real(), m.a2_coeff.imag(),
                      std::abs(c.residual_product), std::abs(c.residual_sum), c.degenerate});
  }
  emit(os, cfg, t);
  return kPass;
}

int run_pdfv(const RunConfig &cfg, std::ostream &os) {
  const auto ans = pdfv_ansatz(cfg);
  const Grid g(cfg.resolved_l(), cfg.resolved_n());
  const auto crossings = velocity_zero_crossings(PdfvSystem::from_ansatz(ans), g);
  Table t{{"x", "simplified_re", "simplified_im", "definitional_re", "definitional_im", "quoted_re", "quoted_im"},
          {}};
  const double nan = std::nan("");
  for (double x : g.points()) {
    const cplx def = eff_potential_definitional(ans, cfg.which, x);
    cplx simp{nan, nan}, quoted{nan, nan};
    if (cfg.constraint_set == 1) simp = eff_potential_simplified(ans, cfg.which, x);
    if (cfg.which == 2) quoted = eff_potential_quoted_full(ans, x);
    t.rows.push_back({x, simp.real(), simp.imag(), def.real(), def.imag(), quoted.real(), quoted.imag()});
  }
  Json extra;
  extra["velocity_zero_crossings"] = Json::array();
  for (double c : crossings) extra["velocity_zero_crossings"].push_back(c);
  emit(os, cfg, t, extra);
  return kPass;
}

int run_verify(const RunConfig &cfg, std::ostream &os) {
  const auto checks = cfg.checks.empty() ? default_checks() : cfg.checks;
  Json list = Json::array();
  bool all = true;
  Table t{{"check", "pass", "values"}, {}};
  for (const auto &name : checks) {
    const auto r = run_check(name, cfg);
    all = all && r.pass;
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["parameters"] = Json::object();
    for (const auto &[k, v] : r.parameters) j["parameters"][k] = v;
    j["values"] = Json::object();
    std::string packed;
    for (const auto &[k, v] : r.values) {
      j["values"][k] = v;
      packed += (packed.empty() ? "" : ";") + k + "=" + format_double(v);
    }
    j["grid_sizes"] = r.grid_sizes;
    j["convergence_ratios"] = r.convergence_ratios;
    if (!r.note.empty()) j["note"] = r.note;
    list.push_back(j);
    t.rows.push_back({r.name, r.pass, packed});
  }
  if (cfg.resolved_format() == "csv") {
    write_csv(os, cfg.echo(), t);
  } else {
    Json body;
    body["all_pass"] = all;
    body["checks"] = list;
    write_report(os, cfg.command, cfg.echo(), body);
  }
  return all ? kPass : kVerifyFailed;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  try {
    std::string help;
    const auto parsed = parse_args(argc, argv, help);
    if (!parsed) {
      out << help;
      return kPass;
    }
    cfg = *parsed;
    validate(cfg);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kPass;
  try {
    if (cfg.command == "potential") code = run_potential(cfg, buf);
    else if (cfg.command == "spectrum") code = run_spectrum(cfg, buf);
    else if (cfg.command == "verify") code = run_verify(cfg, buf);
    else if (cfg.command == "constraints") code = run_constraints(cfg, buf);
    else code = run_pdfv(cfg, buf);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidModel &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SingularVelocity &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }

  if (cfg.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

} // namespace ptweyl::cli
