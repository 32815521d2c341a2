#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cochain/complex.hpp"
#include "cochain/expr.hpp"
#include "cochain/field.hpp"
#include "cochain/report.hpp"
#include "cochain/tensor.hpp"

// Static isotropic metrics ds^2 = f(H) dt^2 - g(H) dx^2 on R^4 (coordinate 0
// is t), their Levi-Civita connection lowered with the flat eta, and the
// potential A whose d_G is the symmetric-free part of that connection.
namespace cochain::spacetime {

inline constexpr std::size_t kDim = 4;

// Profiles such as f and g are one-variable expressions whose coordinate 0
// stands for H.
Expr parse_profile(std::string_view text);
std::string profile_to_string(const Expr& profile);
// profile(H(x)) as a field on R^4.
ScalarField compose(const Expr& profile, const ScalarField& h);

struct IsotropicMetric {
  std::string name;
  Expr f;
  Expr g;
  ScalarField h;  // on R^4, independent of t
  // Spatial radii where the metric degenerates; kept out of sample domains.
  std::vector<Rational> singular_radii;
  // Closed-form u(H) where one has been derived for this family.
  std::optional<Expr> u_closed;
};

// Validates the pieces: f and g one-variable, h on R^4 with dh/dt = 0.
IsotropicMetric make_metric(std::string name, Expr f, Expr g, ScalarField h,
                            std::vector<Rational> singular_radii = {});

// |x| = sqrt(x1^2 + x2^2 + x3^2) on R^4.
ScalarField spatial_radius();

IsotropicMetric mp_metric(ScalarField h);
IsotropicMetric extreme_rn_metric(const Rational& mass);
IsotropicMetric schwarzschild_metric(const Rational& omega);
IsotropicMetric flat_metric();

struct MetricParams {
  std::optional<Rational> mass;
  std::optional<Rational> omega;
  std::optional<std::string> f;  // profile s-expressions for "custom"
  std::optional<std::string> g;
  std::optional<std::string> h;  // field s-expression in t, x1..x3
};

// name in {mp, extreme_rn, schwarzschild, flat, custom}. Throws BadParameter
// on unknown names, non-positive mass/omega or missing custom pieces.
IsotropicMetric builtin_metric(const std::string& name, const MetricParams& params = {});

// diag(+1, -1, -1, -1)
Tensor flat_background();
// diag(f(H), -g(H), -g(H), -g(H))
Tensor metric_tensor(const IsotropicMetric& m);

// eta_{mu tau} Gamma^tau_{nu lambda} for a diagonal metric tensor, with
// Gamma from the Levi-Civita formula. Indices are lowered with eta, not with
// the metric.
Tensor levi_civita_lowered(const Tensor& diagonal_metric);
Tensor christoffel_lowered(const IsotropicMetric& m);

// Closed-form nonzero entries for this metric family:
//   Gamma_tjt = Gamma_ttj = 1/2 d_j log f(H)
//   Gamma_jtt = -d_j f(H) / 2g
//   Gamma_kjk = Gamma_kkj = -1/2 d_j log g(H)      (all j, k)
//   Gamma_jkk = 1/2 d_j log g(H)                   (j != k)
Tensor christoffel_closed_form(const IsotropicMetric& m);

struct ConnectionDecomposition {
  Tensor gamma_lowered;
  Tensor symmetric_part;
  CochainElement field_strength;  // in G(2)
};

// Splits gamma into its total symmetrization and the remainder F. Throws
// NotConnectionShaped if gamma is not symmetric in its last two slots and
// InvalidMember if F fails G(2) membership.
ConnectionDecomposition symmetric_free_part(const Tensor& gamma, const EqualityPolicy& policy);

struct Potential {
  CochainElement a;  // G(1): A_tt = u(H), A_jj = v(H)
  Expr u_prime;      // profile: -2f'/(3f) - 2f'/(3g)
  Expr v;            // profile: (4/3) log g
  std::optional<Expr> u_closed;
};

// u is kept as a formal primitive of u'(H) along H; only its derivatives
// are ever needed.
Potential build_potential(const IsotropicMetric& m);

// Closed-form F in terms of u and v:
//   F_tjt = F_ttj = -1/4 d_j u,  F_jtt = 1/2 d_j u,
//   F_kjk = F_kkj = -1/4 d_j v,  F_jkk = 1/2 d_j v   (j != k), rest zero.
Tensor field_strength_closed_form(const IsotropicMetric& m, const Potential& p);

// Sample policy over integer points with integer |x|, avoiding the metric's
// singular radii.
EqualityPolicy metric_policy(const IsotropicMetric& m, std::size_t samples, double tol,
                             std::uint64_t seed);

// Max over all 64 components and all sample points of |F - d_G A|, relative.
// Throws SingularPoint naming the sample if H is singular there and
// SingularMetric if f(H) or g(H) vanishes.
VerificationReport verify_potential(const IsotropicMetric& m, const EqualityPolicy& policy);

// Computed Gamma and F against the closed-form tables, one check per family.
VerificationReport table_report(const IsotropicMetric& m, const EqualityPolicy& policy);

// Sum_j d_j d_j H over the spatial axes at the sample points. Informational:
// nothing else in this module relies on H being harmonic.
VerificationReport check_harmonic(const ScalarField& h, const EqualityPolicy& policy);

}  // namespace cochain::spacetime
