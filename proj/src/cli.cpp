#include "cochain/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cochain/complex.hpp"
#include "cochain/json_io.hpp"
#include "cochain/poincare.hpp"
#include "cochain/random.hpp"
#include "cochain/spacetime.hpp"

namespace cochain::cli {

namespace {

// Folds many comparisons under one check name; keeps the worst residual and
// the first failing witness.
class CheckLog {
 public:
  void record(const std::string& name, bool passed, double residual,
              const MultiIndex& witness, const std::vector<Point>& point, std::size_t trial) {
    Check& c = slot(name);
    c.worst_residual = std::max(c.worst_residual, residual);
    if (!passed && c.passed) {
      c.passed = false;
      c.witness_index = witness;
      if (!point.empty()) c.witness_point = point.front();
      c.detail = "first failure in trial " + std::to_string(trial);
    }
  }
  void record(const std::string& name, const TensorComparison& cmp, std::size_t trial) {
    record(name, cmp.equal, cmp.worst_residual, cmp.witness_index, cmp.witness_point, trial);
  }
  void record(const std::string& name, const MembershipReport& r, std::size_t trial) {
    record(name, r.member, r.worst_residual, r.witness_index, r.witness_point, trial);
    if (!r.member && slot(name).detail.find(':') == std::string::npos) {
      slot(name).detail += ": " + r.failed_condition;
    }
  }
  VerificationReport finish(std::string subject) {
    VerificationReport report(std::move(subject));
    for (auto& c : checks_) report.add(std::move(c));
    return report;
  }

 private:
  Check& slot(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back(Check{name, true, 0.0, {}, {}, {}});
    return checks_.back();
  }
  std::vector<Check> checks_;
};

std::string grade_label(const char* family, std::size_t q) {
  return std::string(family) + "(" + std::to_string(q) + ")";
}

}  // namespace

VerificationReport complex_suite(const ComplexSuiteOptions& o) {
  if (o.dim < 1 || o.dim > kMaxDim) throw BadParameter("dim must lie in [1, 8]");
  if (o.grade > 5) throw BadParameter("grade must lie in [0, 5]");
  Rng rng(o.seed);
  const EqualityPolicy exact;
  const std::size_t q = o.grade;
  const std::string K = grade_label("K", q), G = grade_label("G", q);
  CheckLog log;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const CochainElement e = random_k_member(rng, o.dim, q);
    const CochainElement de = d_K(e);
    Tensor dde = d_K(de).tensor();
    if (o.inject_fault && trial == 0) {
      std::vector<ScalarField> entries = dde.entries();
      entries.front() += ScalarField::constant(o.dim, Rational(1));
      dde = Tensor(dde.dim(), dde.rank(), std::move(entries));
    }
    log.record("d_K o d_K = 0 on " + K, compare(dde, Tensor(dde.dim(), dde.rank()), exact), trial);
    log.record("d_K maps " + K + " into " + grade_label("K", q + 1),
               check_membership(de.tensor(), de.space()), trial);

    const CochainElement s = phi(e);
    log.record("phi maps " + K + " into " + G, check_membership(s.tensor(), s.space()), trial);
    log.record("psi o phi = id on " + K, compare(psi(s).tensor(), e.tensor(), exact), trial);

    const CochainElement g = random_g_member(rng, o.dim, q);
    const CochainElement pg = psi(g);
    log.record("psi maps " + G + " into " + K, check_membership(pg.tensor(), pg.space()), trial);
    log.record("phi o psi = id on " + G, compare(phi(pg).tensor(), g.tensor(), exact), trial);

    const CochainElement dg = d_G(g);
    const Tensor ddg = d_G(dg).tensor();
    log.record("d_G o d_G = 0 on " + G, compare(ddg, Tensor(ddg.dim(), ddg.rank()), exact), trial);
    if (q >= 2) {
      const Tensor r = g_decomposition_residual(g);
      log.record("decomposition identity on " + G, compare(r, Tensor(r.dim(), r.rank()), exact),
                 trial);
    }
    if (q >= 1) {
      const Tensor r = g_decomposition_residual(dg);
      log.record("decomposition identity on " + grade_label("G", q + 1),
                 compare(r, Tensor(r.dim(), r.rank()), exact), trial);
    }
    if (q == 1) {
      log.record("d_G equals the explicit G(1) formula",
                 compare(dg.tensor(), d_G1_explicit(g).tensor(), exact), trial);
    }
  }
  return log.finish("check-complex dim=" + std::to_string(o.dim) + " grade=" +
                    std::to_string(q) + " trials=" + std::to_string(o.trials) +
                    " seed=" + std::to_string(o.seed));
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParameter("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParameter("cannot write '" + path + "'");
  out << content;
}

void print_report(const VerificationReport& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
}

int exit_for(const VerificationReport& report) {
  return report.overall() ? kVerified : kIdentityViolation;
}

struct MetricOptions {
  std::string name = "mp";
  std::string metric_json;
  std::string h, f, g, mass, omega;
  std::size_t samples = 100;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json = false;
};

void add_metric_options(CLI::App* cmd, MetricOptions& o) {
  cmd->add_option("--metric", o.name, "mp | extreme_rn | schwarzschild | flat | custom")
      ->check(CLI::IsMember({"mp", "extreme_rn", "schwarzschild", "flat", "custom"}));
  cmd->add_option("--metric-json", o.metric_json, "metric JSON document");
  cmd->add_option("--H", o.h, "H as an s-expression in t, x1, x2, x3");
  cmd->add_option("--f", o.f, "f profile as an s-expression in H (custom)");
  cmd->add_option("--g", o.g, "g profile as an s-expression in H (custom)");
  cmd->add_option("--mass", o.mass, "G_N M for extreme_rn");
  cmd->add_option("--omega", o.omega, "omega for schwarzschild");
  cmd->add_option("--samples", o.samples, "sample points")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "relative tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_flag("--json", o.json, "print the report as JSON");
}

spacetime::IsotropicMetric load_metric(const MetricOptions& o) {
  if (!o.metric_json.empty()) return parse_metric(read_file(o.metric_json));
  spacetime::MetricParams params;
  if (!o.h.empty()) params.h = o.h;
  if (!o.f.empty()) params.f = o.f;
  if (!o.g.empty()) params.g = o.g;
  if (!o.mass.empty()) params.mass = parse_rational(o.mass);
  if (!o.omega.empty()) params.omega = parse_rational(o.omega);
  return spacetime::builtin_metric(o.name, params);
}

std::uint64_t seed_override(std::uint64_t seed) {
  if (const char* env = std::getenv("COCHAIN_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw BadParameter("COCHAIN_SEED must be a non-negative integer");
    }
  }
  return seed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cochain complexes K and G over flat space, potentials, and isotropic metrics"};
  app.name("cochain");
  app.require_subcommand(1);

  ComplexSuiteOptions complex_opts;
  bool complex_json = false;
  auto* check = app.add_subcommand("check-complex", "seeded property suite on K and G");
  check->add_option("--dim", complex_opts.dim, "dimension")->required()->check(CLI::Range(1, 8));
  check->add_option("--grade", complex_opts.grade, "grade")->required()->check(CLI::Range(0, 5));
  check->add_option("--trials", complex_opts.trials, "random elements per check");
  check->add_option("--seed", complex_opts.seed, "generator seed");
  check->add_flag("--inject-fault", complex_opts.inject_fault,
                  "perturb one entry of d_K(d_K(E)) by 1");
  check->add_flag("--json", complex_json, "print the report as JSON");

  std::string in_path, out_path;
  bool poincare_json = false;
  auto* poincare = app.add_subcommand("poincare", "potential of a closed polynomial K element");
  poincare->add_option("--in", in_path, "tensor JSON (space K)")->required();
  poincare->add_option("--out", out_path, "where to write the potential");
  poincare->add_flag("--json", poincare_json, "print the report as JSON");

  std::size_t kernel_dim = 0;
  auto* kernel = app.add_subcommand("kernel", "affine kernel of d_K on K(0)");
  kernel->add_option("--dim", kernel_dim, "dimension")->required()->check(CLI::Range(1, 8));

  auto* spacetime_cmd = app.add_subcommand("spacetime", "isotropic metrics");
  spacetime_cmd->require_subcommand(1);
  MetricOptions verify_opts, table_opts;
  bool harmonic = false;
  auto* verify = spacetime_cmd->add_subcommand("verify", "check F = d_G A at sample points");
  add_metric_options(verify, verify_opts);
  verify->add_flag("--check-harmonic", harmonic, "also report the Laplacian of H (informational)");
  auto* table = spacetime_cmd->add_subcommand("table", "Gamma and F against closed-form tables");
  add_metric_options(table, table_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*check) {
      complex_opts.seed = seed_override(complex_opts.seed);
      const VerificationReport report = complex_suite(complex_opts);
      print_report(report, complex_json, out);
      return exit_for(report);
    }

    if (*poincare) {
      VerificationReport report("poincare " + in_path);
      std::ostream& report_out = out_path.empty() ? err : out;
      TensorDocument doc;
      try {
        doc = parse_tensor(read_file(in_path));
      } catch (const MembershipError& e) {
        report.add(Check{"input is a K element", false, 1.0, e.witness(), std::nullopt, e.what()});
        print_report(report, poincare_json, report_out);
        return kIdentityViolation;
      }
      if (!doc.space || doc.space->family != Space::Family::kK) {
        throw SchemaError("/space", "poincare expects a K element");
      }
      const std::string label = doc.space->to_string();
      report.add(Check{"input lies in " + label, true, 0.0, {}, {}, {}});
      const CochainElement t = CochainElement::make(doc.tensor, *doc.space);
      std::optional<PotentialResult> solved;
      try {
        solved.emplace(solve_potential(t));
      } catch (const NotClosed& e) {
        report.add(Check{"input is closed under d_K", false, 1.0, e.witness(), std::nullopt,
                         e.what()});
        print_report(report, poincare_json, report_out);
        return kIdentityViolation;
      }
      const PotentialResult& result = *solved;
      report.add(Check{"input is closed under d_K", true, 0.0, {}, {}, {}});
      report.add(Check{"d_K(potential) = input", result.residual == 0.0, result.residual, {}, {},
                       {}});
      report.add(Check{"potential lies in " + result.potential.space().to_string(), true, 0.0, {},
                       {}, {}});
      const std::string text = emit_tensor(result.potential);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      print_report(report, poincare_json, report_out);
      return exit_for(report);
    }

    if (*kernel) {
      const auto basis = affine_kernel_basis(kernel_dim);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        out << "b" << i << " = " << basis[i].to_sexpr() << "\n";
      }
      VerificationReport report("kernel dim=" + std::to_string(kernel_dim));
      report.add(Check{"each basis field has zero Hessian", true, 0.0, {}, {}, {}});
      report.add(Check{"basis size is dim + 1 and independent",
                       coefficient_rank(basis) == kernel_dim + 1, 0.0, {}, {},
                       std::to_string(basis.size()) + " fields"});
      out << report.to_text();
      return exit_for(report);
    }

    if (*verify) {
      const auto m = load_metric(verify_opts);
      const auto policy = spacetime::metric_policy(m, verify_opts.samples, verify_opts.tol,
                                                   seed_override(verify_opts.seed));
      VerificationReport report = spacetime::verify_potential(m, policy);
      print_report(report, verify_opts.json, out);
      if (harmonic) print_report(spacetime::check_harmonic(m.h, policy), verify_opts.json, out);
      return exit_for(report);
    }

    if (*table) {
      const auto m = load_metric(table_opts);
      const auto policy = spacetime::metric_policy(m, table_opts.samples, table_opts.tol,
                                                   seed_override(table_opts.seed));
      const VerificationReport report = spacetime::table_report(m, policy);
      print_report(report, table_opts.json, out);
      return exit_for(report);
    }
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << "\n";
    return kIdentityViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace cochain::cli
