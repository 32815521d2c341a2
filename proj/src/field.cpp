#include "cochain/field.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "cochain/errors.hpp"

namespace cochain {

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += cochain::to_string(coords[i]);
  }
  return out + ")";
}

ScalarField::ScalarField(Polynomial p) : dim_(p.dim()), rep_(std::move(p)) {}

ScalarField::ScalarField(std::size_t dim, Expr e) : dim_(dim), rep_(Polynomial(dim)) {
  if (e.min_dim() > dim) throw BadParameter("expression uses a coordinate beyond dim");
  rep_ = std::move(e);
}

ScalarField ScalarField::constant(std::size_t dim, const Rational& value) {
  return ScalarField(Polynomial::constant(dim, value));
}

ScalarField ScalarField::coordinate(std::size_t dim, std::size_t axis) {
  return ScalarField(Polynomial::coordinate(dim, axis));
}

const Polynomial& ScalarField::polynomial() const {
  if (!is_polynomial()) throw NonPolynomial("field is not polynomial");
  return std::get<Polynomial>(rep_);
}

Expr ScalarField::to_expr() const {
  if (is_polynomial()) return Expr::from_polynomial(std::get<Polynomial>(rep_));
  return std::get<Expr>(rep_);
}

bool ScalarField::is_zero() const {
  if (is_polynomial()) return std::get<Polynomial>(rep_).is_zero();
  return std::get<Expr>(rep_).is_zero();
}

ScalarField ScalarField::differentiate(std::size_t axis) const {
  if (axis >= dim_) throw BadParameter("differentiation axis out of range");
  if (is_polynomial()) return ScalarField(std::get<Polynomial>(rep_).differentiate(axis));
  return ScalarField(dim_, std::get<Expr>(rep_).differentiate(axis));
}

Value ScalarField::evaluate(const Point& p) const {
  if (p.dim() != dim_) throw BadParameter("point dimension does not match field");
  if (is_polynomial()) return Value(std::get<Polynomial>(rep_).evaluate(p.coords));
  return std::get<Expr>(rep_).evaluate(p.coords);
}

ScalarField ScalarField::operator-() const {
  if (is_polynomial()) return ScalarField(-std::get<Polynomial>(rep_));
  return ScalarField(dim_, -std::get<Expr>(rep_));
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  if (o.dim_ != dim_) throw BadParameter("field dimension mismatch");
  if (is_polynomial() && o.is_polynomial()) {
    std::get<Polynomial>(rep_) += std::get<Polynomial>(o.rep_);
  } else if (o.is_zero()) {
    // keep as is
  } else {
    rep_ = to_expr() + o.to_expr();
  }
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  if (o.dim_ != dim_) throw BadParameter("field dimension mismatch");
  if (is_polynomial() && o.is_polynomial()) {
    std::get<Polynomial>(rep_) -= std::get<Polynomial>(o.rep_);
  } else if (o.is_zero()) {
  } else {
    rep_ = to_expr() - o.to_expr();
  }
  return *this;
}

ScalarField& ScalarField::operator*=(const Rational& k) {
  if (is_polynomial()) {
    std::get<Polynomial>(rep_) *= k;
  } else {
    rep_ = Expr::constant(k) * std::get<Expr>(rep_);
  }
  return *this;
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  if (a.dim_ != b.dim_) throw BadParameter("field dimension mismatch");
  if (a.is_polynomial() && b.is_polynomial()) {
    return ScalarField(std::get<Polynomial>(a.rep_) * std::get<Polynomial>(b.rep_));
  }
  return ScalarField(a.dim_, a.to_expr() * b.to_expr());
}

std::string ScalarField::to_sexpr() const { return to_expr().to_sexpr(); }

std::string SampleDomain::describe() const {
  std::string out = kind == Kind::kIntegerBox ? "integer-box" : "perfect-square-radius";
  out += "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  for (const auto& r : excluded_radii) out += " minus r=" + to_string(r);
  return out;
}

namespace {

// Spatial vectors with integer length.
constexpr std::array<std::array<int, 3>, 10> kPythagoreanTriples{{
    {1, 2, 2}, {2, 3, 6}, {1, 4, 8}, {4, 4, 7}, {2, 6, 9},
    {2, 10, 11}, {6, 6, 7}, {3, 4, 12}, {1, 12, 12}, {0, 3, 4},
}};

std::vector<std::array<int, 3>> spatial_candidates(const SampleDomain& domain) {
  std::set<std::array<int, 3>> out;
  for (int scale = 1; scale <= 2; ++scale) {
    for (auto base : kPythagoreanTriples) {
      std::array<int, 3> v{base[0] * scale, base[1] * scale, base[2] * scale};
      std::sort(v.begin(), v.end());
      do {
        for (int signs = 0; signs < 8; ++signs) {
          std::array<int, 3> s = v;
          for (int k = 0; k < 3; ++k) {
            if (signs & (1 << k)) s[k] = -s[k];
          }
          const long r2 = long(s[0]) * s[0] + long(s[1]) * s[1] + long(s[2]) * s[2];
          bool excluded = false;
          for (const auto& r : domain.excluded_radii) {
            if (Rational(r * r) == Rational(r2)) excluded = true;
          }
          if (!excluded) out.insert(s);
        }
      } while (std::next_permutation(v.begin(), v.end()));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Point> sample_points(const EqualityPolicy& policy, std::size_t dim,
                                 std::size_t count) {
  const auto& domain = policy.domain;
  if (domain.hi < domain.lo) throw BadParameter("empty sample box");
  std::mt19937_64 rng(policy.seed);
  const auto width = static_cast<std::uint64_t>(domain.hi - domain.lo + 1);
  auto draw_int = [&] { return domain.lo + static_cast<long>(rng() % width); };

  const bool shell = domain.kind == SampleDomain::Kind::kPerfectSquareRadius && dim >= 3;
  std::vector<std::array<int, 3>> spatial;
  if (shell) {
    spatial = spatial_candidates(domain);
    if (spatial.empty()) throw BadParameter("sample domain excludes every point");
  }
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Point p;
    p.coords.resize(dim);
    const std::size_t boxed = shell ? dim - 3 : dim;
    for (std::size_t k = 0; k < boxed; ++k) p.coords[k] = Rational(draw_int());
    if (shell) {
      const auto& s = spatial[rng() % spatial.size()];
      for (std::size_t k = 0; k < 3; ++k) p.coords[boxed + k] = Rational(s[k]);
    }
    points.push_back(std::move(p));
  }
  return points;
}

FieldComparison compare(const ScalarField& a, const ScalarField& b,
                        const EqualityPolicy& policy) {
  if (a.dim() != b.dim()) throw BadParameter("compared fields differ in dimension");
  FieldComparison result;
  if (a.is_polynomial() && b.is_polynomial()) {
    Polynomial diff = a.polynomial() - b.polynomial();
    result.equal = diff.is_zero();
    result.worst_residual = diff.max_abs_coefficient();
    return result;
  }
  const Expr diff = a.to_expr() - b.to_expr();
  if (diff.is_zero()) return result;
  if (auto poly = diff.to_polynomial(a.dim())) {
    result.equal = poly->is_zero();
    result.worst_residual = poly->max_abs_coefficient();
    return result;
  }

  // Oversample so singular candidates can be dropped.
  const std::size_t budget = std::max<std::size_t>(policy.sample_count * 20, 20);
  const auto candidates = sample_points(policy, a.dim(), budget);
  std::size_t used = 0;
  for (const auto& p : candidates) {
    if (used == policy.sample_count) break;
    Value va, vb;
    try {
      va = a.evaluate(p);
      vb = b.evaluate(p);
    } catch (const SingularPoint&) {
      continue;
    }
    ++used;
    const double r = relative_residual(va, vb);
    if (result.witness.empty() || r > result.worst_residual) {
      result.worst_residual = r;
      result.witness = {p};
    }
  }
  if (used == 0) {
    throw IncomparableBackends("no sample point in " + policy.domain.describe() +
                               " where both fields are defined");
  }
  result.equal = result.worst_residual <= policy.tol;
  return result;
}

bool equals(const ScalarField& a, const ScalarField& b, const EqualityPolicy& policy) {
  return compare(a, b, policy).equal;
}

}  // namespace cochain
