#include "cochain/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "cochain/errors.hpp"
#include "cochain/kernels.hpp"
#include "cochain/permutation.hpp"
#include "cochain/sexpr.hpp"

namespace cochain::spacetime {

namespace {

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names{"H"};
  return names;
}

ScalarField field_from(Expr e) {
  if (auto p = e.to_polynomial(kDim)) return ScalarField(std::move(*p));
  return ScalarField(kDim, std::move(e));
}

Expr rat(long num, long den = 1) { return Expr::constant(make_rational(num, den)); }

// d/dH of the profile, still a profile.
Expr profile_derivative(const Expr& profile) { return profile.differentiate(0); }

}  // namespace

Expr parse_profile(std::string_view text) { return parse_sexpr(text, profile_names()); }

std::string profile_to_string(const Expr& profile) { return profile.to_sexpr(profile_names()); }

ScalarField compose(const Expr& profile, const ScalarField& h) {
  return field_from(profile.substitute(0, h.to_expr()));
}

ScalarField spatial_radius() {
  const Expr r2 = Expr::sum({Expr::int_pow(Expr::coord(1), 2), Expr::int_pow(Expr::coord(2), 2),
                             Expr::int_pow(Expr::coord(3), 2)});
  return ScalarField(kDim, Expr::sqrt(r2));
}

IsotropicMetric make_metric(std::string name, Expr f, Expr g, ScalarField h,
                            std::vector<Rational> singular_radii) {
  if (f.min_dim() > 1 || g.min_dim() > 1) {
    throw BadParameter("metric profiles f and g must depend on H only");
  }
  if (f.is_zero() || g.is_zero()) throw SingularMetric("metric profile is identically zero");
  if (h.dim() != kDim) throw BadParameter("H must be a field on R^4");
  if (!h.differentiate(0).is_zero()) throw BadParameter("H must not depend on t");
  IsotropicMetric m;
  m.name = std::move(name);
  m.f = std::move(f);
  m.g = std::move(g);
  m.h = std::move(h);
  m.singular_radii = std::move(singular_radii);
  return m;
}

IsotropicMetric mp_metric(ScalarField h) {
  const Expr H = Expr::coord(0);
  IsotropicMetric m = make_metric("mp", Expr::int_pow(H, -2), Expr::int_pow(H, 2), std::move(h));
  // u' = (4/3)(1/H + 1/H^5) integrates to (4/3) log H - (1/3) H^-4.
  m.u_closed = rat(4, 3) * Expr::log(H) - rat(1, 3) * Expr::int_pow(H, -4);
  return m;
}

IsotropicMetric extreme_rn_metric(const Rational& mass) {
  if (sgn(mass) <= 0) throw BadParameter("mass must be positive");
  const Expr h = Expr::constant(1) + Expr::constant(mass) / spatial_radius().to_expr();
  IsotropicMetric m = mp_metric(ScalarField(kDim, h));
  m.name = "extreme_rn";
  return m;
}

IsotropicMetric schwarzschild_metric(const Rational& omega) {
  if (sgn(omega) <= 0) throw BadParameter("omega must be positive");
  const Rational quarter = omega / 4;
  const Expr h = Expr::constant(1) - Expr::constant(quarter) / spatial_radius().to_expr();
  const Expr H = Expr::coord(0);
  // (1 + w/4r)^2 (1 - w/4r)^-2 = (2 - H)^2 H^-2 and (1 - w/4r)^4 = H^4.
  Expr f = Expr::int_pow(Expr::constant(2) - H, 2) * Expr::int_pow(H, -2);
  Expr g = Expr::int_pow(H, 4);
  return make_metric("schwarzschild", std::move(f), std::move(g), ScalarField(kDim, h),
                     {quarter});
}

IsotropicMetric flat_metric() {
  return make_metric("flat", Expr::constant(1), Expr::constant(1),
                     ScalarField::constant(kDim, Rational(1)));
}

IsotropicMetric builtin_metric(const std::string& name, const MetricParams& params) {
  auto h_or_default = [&] {
    if (params.h) return parse_field(*params.h, kDim);
    return ScalarField(kDim, Expr::constant(1) + Expr::constant(1) / spatial_radius().to_expr());
  };
  if (name == "mp") return mp_metric(h_or_default());
  if (name == "extreme_rn") return extreme_rn_metric(params.mass.value_or(Rational(1)));
  if (name == "schwarzschild") return schwarzschild_metric(params.omega.value_or(Rational(4)));
  if (name == "flat") return flat_metric();
  if (name == "custom") {
    if (!params.f || !params.g || !params.h) {
      throw BadParameter("custom metric needs f, g and H");
    }
    return make_metric("custom", parse_profile(*params.f), parse_profile(*params.g),
                       parse_field(*params.h, kDim));
  }
  throw BadParameter("unknown metric '" + name + "'");
}

Tensor flat_background() {
  Tensor eta(kDim, 2);
  for (std::size_t a = 0; a < kDim; ++a) {
    eta.set({a, a}, ScalarField::constant(kDim, Rational(a == 0 ? 1 : -1)));
  }
  return eta;
}

Tensor metric_tensor(const IsotropicMetric& m) {
  Tensor metric(kDim, 2);
  const ScalarField f = compose(m.f, m.h);
  const ScalarField g = compose(m.g, m.h);
  metric.set({0, 0}, f);
  for (std::size_t j = 1; j < kDim; ++j) metric.set({j, j}, -g);
  return metric;
}

Tensor levi_civita_lowered(const Tensor& metric) {
  if (metric.rank() != 2) throw RankMismatch("metric must be rank 2");
  const std::size_t d = metric.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (a != b && !metric.at({a, b}).is_zero()) {
        throw BadParameter("levi_civita_lowered expects a diagonal metric");
      }
    }
  }
  const Tensor eta = flat_background();
  const Tensor dg = kernels::nabla(metric);  // dg[s, a, b] = d_s g_ab
  Tensor gamma(d, 3);
  for (std::size_t tau = 0; tau < d; ++tau) {
    const ScalarField inverse(d, Expr::constant(1) / metric.at({tau, tau}).to_expr());
    const Rational lower = eta.at({tau, tau}).polynomial().terms().front().coeff;
    for (std::size_t nu = 0; nu < d; ++nu) {
      for (std::size_t la = 0; la < d; ++la) {
        ScalarField bracket = dg.at({nu, tau, la}) + dg.at({la, tau, nu}) - dg.at({tau, nu, la});
        if (bracket.is_zero()) continue;
        gamma.set({tau, nu, la}, Rational(lower / 2) * (inverse * bracket));
      }
    }
  }
  return gamma;
}

Tensor christoffel_lowered(const IsotropicMetric& m) {
  return levi_civita_lowered(metric_tensor(m));
}

Tensor christoffel_closed_form(const IsotropicMetric& m) {
  const ScalarField f = compose(m.f, m.h);
  const ScalarField g = compose(m.g, m.h);
  const ScalarField log_f(kDim, Expr::log(f.to_expr()));
  const ScalarField log_g(kDim, Expr::log(g.to_expr()));
  const ScalarField inv_g(kDim, Expr::constant(1) / g.to_expr());
  const Rational half(1, 2);
  Tensor gamma(kDim, 3);
  for (std::size_t j = 1; j < kDim; ++j) {
    const ScalarField tjt = half * log_f.differentiate(j);
    gamma.set({0, j, 0}, tjt);
    gamma.set({0, 0, j}, tjt);
    gamma.set({j, 0, 0}, -half * (f.differentiate(j) * inv_g));
    for (std::size_t k = 1; k < kDim; ++k) {
      const ScalarField kjk = -half * log_g.differentiate(j);
      gamma.set({k, j, k}, kjk);
      gamma.set({k, k, j}, kjk);
      if (j != k) gamma.set({j, k, k}, half * log_g.differentiate(j));
    }
  }
  return gamma;
}

ConnectionDecomposition symmetric_free_part(const Tensor& gamma, const EqualityPolicy& policy) {
  if (gamma.rank() != 3) throw RankMismatch("connection must be rank 3");
  const std::vector<std::size_t> swap_last{0, 2, 1};
  const TensorComparison shape = compare(gamma, kernels::permute_slots(gamma, swap_last), policy);
  if (!shape.equal) {
    throw NotConnectionShaped("connection is not symmetric in its last two slots at " +
                              to_string(shape.witness_index));
  }
  Tensor sum(gamma.dim(), 3);
  for (const auto& p : all_permutations(3)) sum = sum + kernels::permute_slots(gamma, p.map);
  Tensor symmetric = Rational(1, 6) * sum;
  Tensor f = gamma - symmetric;
  CochainElement strength = CochainElement::make(std::move(f), Space::G(2), policy);
  return {gamma, std::move(symmetric), std::move(strength)};
}

Potential build_potential(const IsotropicMetric& m) {
  const Expr fp = profile_derivative(m.f);
  Expr u_prime = (rat(-2) * fp) / (rat(3) * m.f) - (rat(2) * fp) / (rat(3) * m.g);
  Expr v = rat(4, 3) * Expr::log(m.g);

  Tensor a(kDim, 2);
  if (!u_prime.is_zero()) {
    const Expr integrand = compose(u_prime, m.h).to_expr();
    a.set({0, 0}, ScalarField(kDim, Expr::primitive(integrand, m.h.to_expr())));
  }
  const ScalarField v_of_h = compose(v, m.h);
  for (std::size_t j = 1; j < kDim; ++j) a.set({j, j}, v_of_h);
  return {CochainElement::make(std::move(a), Space::G(1)), std::move(u_prime), std::move(v),
          m.u_closed};
}

Tensor field_strength_closed_form(const IsotropicMetric& m, const Potential& p) {
  const Tensor& a = p.a.tensor();
  const ScalarField& u = a.at({0, 0});
  const ScalarField& v = a.at({1, 1});
  (void)m;
  const Rational half(1, 2), quarter(1, 4);
  Tensor f(kDim, 3);
  for (std::size_t j = 1; j < kDim; ++j) {
    const ScalarField du = u.differentiate(j);
    const ScalarField dv = v.differentiate(j);
    f.set({0, j, 0}, -quarter * du);
    f.set({0, 0, j}, -quarter * du);
    f.set({j, 0, 0}, half * du);
    for (std::size_t k = 1; k < kDim; ++k) {
      if (j == k) continue;
      f.set({k, j, k}, -quarter * dv);
      f.set({k, k, j}, -quarter * dv);
      f.set({j, k, k}, half * dv);
    }
  }
  return f;
}

EqualityPolicy metric_policy(const IsotropicMetric& m, std::size_t samples, double tol,
                             std::uint64_t seed) {
  EqualityPolicy policy;
  policy.sample_count = samples;
  policy.tol = tol;
  policy.seed = seed;
  policy.domain.kind = SampleDomain::Kind::kPerfectSquareRadius;
  policy.domain.excluded_radii = m.singular_radii;
  return policy;
}

namespace {

// Rejects sample points where the metric is undefined or degenerate.
void check_samples(const IsotropicMetric& m, const std::vector<Point>& points) {
  const ScalarField f = compose(m.f, m.h);
  const ScalarField g = compose(m.g, m.h);
  for (const auto& p : points) {
    try {
      m.h.evaluate(p);
      if (f.evaluate(p).is_zero() || g.evaluate(p).is_zero()) {
        throw SingularMetric("metric degenerates at x=" + p.to_string());
      }
    } catch (const SingularPoint& e) {
      throw SingularPoint(std::string(e.what()) + " at sample x=" + p.to_string());
    }
  }
}

// Worst relative residual between two tensors at sampled points, split into
// families by `family_of(index)`; families keep first-seen order.
VerificationReport compare_families(const std::string& subject, const Tensor& computed,
                                    const Tensor& expected,
                                    const std::function<std::string(const MultiIndex&)>& family_of,
                                    const std::vector<Point>& points, double tol) {
  const auto cv = kernels::evaluate(computed, points);
  const auto ev = kernels::evaluate(expected, points);
  std::vector<Check> checks;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const MultiIndex idx = computed.unflatten(i);
    const std::string family = family_of(idx);
    auto it = std::find(order.begin(), order.end(), family);
    std::size_t slot = static_cast<std::size_t>(it - order.begin());
    if (it == order.end()) {
      order.push_back(family);
      checks.push_back(Check{family, true, 0.0, idx, points.front(), {}});
    }
    Check& c = checks[slot];
    for (std::size_t n = 0; n < points.size(); ++n) {
      const double r = relative_residual(cv[n][i], ev[n][i]);
      if (r > c.worst_residual) {
        c.worst_residual = r;
        c.witness_index = idx;
        c.witness_point = points[n];
      }
    }
  }
  VerificationReport report(subject);
  for (auto& c : checks) {
    c.passed = c.worst_residual <= tol;
    report.add(std::move(c));
  }
  return report;
}

std::string gamma_family(const MultiIndex& i) {
  const bool t0 = i[0] == 0, t1 = i[1] == 0, t2 = i[2] == 0;
  if (t0 && ((t1 && !t2) || (!t1 && t2))) return "Gamma_tjt = Gamma_ttj = 1/2 d_j log f";
  if (!t0 && t1 && t2) return "Gamma_jtt = -d_j f / 2g";
  if (!t0 && !t1 && !t2) {
    if (i[0] == i[2] || i[0] == i[1]) return "Gamma_kjk = Gamma_kkj = -1/2 d_j log g";
    if (i[1] == i[2]) return "Gamma_jkk = 1/2 d_j log g (j != k)";
  }
  return "Gamma vanishing entries";
}

std::string f_family(const MultiIndex& i) {
  const bool t0 = i[0] == 0, t1 = i[1] == 0, t2 = i[2] == 0;
  if (t0 && ((t1 && !t2) || (!t1 && t2))) return "F_tjt = F_ttj = -1/4 d_j u";
  if (!t0 && t1 && t2) return "F_jtt = 1/2 d_j u";
  if (!t0 && !t1 && !t2 && !(i[0] == i[1] && i[1] == i[2])) {
    if (i[0] == i[2] || i[0] == i[1]) return "F_kjk = F_kkj = -1/4 d_j v (j != k)";
    if (i[1] == i[2]) return "F_jkk = 1/2 d_j v (j != k)";
  }
  return "F vanishing entries (including F_jjj)";
}

EqualityPolicy membership_policy(const EqualityPolicy& policy) {
  EqualityPolicy p = policy;
  p.sample_count = std::min<std::size_t>(policy.sample_count, 8);
  return p;
}

}  // namespace

VerificationReport verify_potential(const IsotropicMetric& m, const EqualityPolicy& policy) {
  if (policy.sample_count == 0) throw BadParameter("sample count must be at least 1");
  const auto points = sample_points(policy, kDim, policy.sample_count);
  check_samples(m, points);

  const ConnectionDecomposition dec =
      symmetric_free_part(christoffel_lowered(m), membership_policy(policy));
  const Potential pot = build_potential(m);
  const Tensor d = d_G(pot.a).tensor();
  const Tensor& f = dec.field_strength.tensor();

  VerificationReport report("spacetime verify metric=" + m.name + " samples=" +
                            std::to_string(points.size()) + " tol=" + format_residual(policy.tol));
  report.add(Check{"F = Gamma - Gamma_sym lies in G(2)", true, 0.0, {}, {}, {}});
  VerificationReport cmp = compare_families(
      "", f, d, [](const MultiIndex&) { return std::string("F = d_G A"); }, points, policy.tol);
  report.append(cmp);
  return report;
}

VerificationReport table_report(const IsotropicMetric& m, const EqualityPolicy& policy) {
  if (policy.sample_count == 0) throw BadParameter("sample count must be at least 1");
  const auto points = sample_points(policy, kDim, policy.sample_count);
  check_samples(m, points);
  const Tensor gamma = christoffel_lowered(m);
  VerificationReport report("spacetime table metric=" + m.name + " samples=" +
                            std::to_string(points.size()) + " tol=" +
                            format_residual(policy.tol));
  report.append(compare_families("", gamma, christoffel_closed_form(m), gamma_family, points,
                                 policy.tol));
  const ConnectionDecomposition dec = symmetric_free_part(gamma, membership_policy(policy));
  const Potential pot = build_potential(m);
  report.append(compare_families("", dec.field_strength.tensor(),
                                 field_strength_closed_form(m, pot), f_family, points,
                                 policy.tol));
  return report;
}

VerificationReport check_harmonic(const ScalarField& h, const EqualityPolicy& policy) {
  if (h.dim() != kDim) throw BadParameter("H must be a field on R^4");
  if (!h.differentiate(0).is_zero()) throw BadParameter("H must not depend on t");
  ScalarField laplacian(kDim);
  for (std::size_t j = 1; j < kDim; ++j) laplacian += h.differentiate(j).differentiate(j);
  const auto points = sample_points(policy, kDim, policy.sample_count);
  Check c{"Laplacian of H vanishes", true, 0.0, std::nullopt, std::nullopt, "informational"};
  for (const auto& p : points) {
    double r = 0.0;
    try {
      r = std::abs(laplacian.evaluate(p).to_double());
    } catch (const SingularPoint& e) {
      throw SingularPoint(std::string(e.what()) + " at sample x=" + p.to_string());
    }
    if (!c.witness_point || r > c.worst_residual) {
      c.worst_residual = r;
      c.witness_point = p;
    }
  }
  c.passed = c.worst_residual <= policy.tol;
  VerificationReport report("harmonicity of H");
  report.add(std::move(c));
  return report;
}

}  // namespace cochain::spacetime
