#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cochain/expr.hpp"
#include "cochain/polynomial.hpp"
#include "cochain/value.hpp"

namespace cochain {

struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  std::string to_string() const;
};

// Smooth scalar function of `dim` coordinates, stored either as an exact
// polynomial or as an expression tree. Arithmetic stays polynomial while
// both operands are polynomial and falls back to Expr otherwise.
class ScalarField {
 public:
  explicit ScalarField(std::size_t dim = 0) : dim_(dim), rep_(Polynomial(dim)) {}
  ScalarField(Polynomial p);
  ScalarField(std::size_t dim, Expr e);

  static ScalarField constant(std::size_t dim, const Rational& value);
  static ScalarField coordinate(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return dim_; }
  bool is_polynomial() const { return std::holds_alternative<Polynomial>(rep_); }
  const Polynomial& polynomial() const;  // throws NonPolynomial
  Expr to_expr() const;
  // Structural zero test: exact for polynomials, folded-constant for Expr.
  bool is_zero() const;

  ScalarField differentiate(std::size_t axis) const;
  Value evaluate(const Point& p) const;

  ScalarField operator-() const;
  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(const Rational& k);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const Rational& k) { return a *= k; }
  friend ScalarField operator*(const Rational& k, ScalarField a) { return a *= k; }
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

  std::string to_sexpr() const;

 private:
  std::size_t dim_;
  std::variant<Polynomial, Expr> rep_;
};

// Where sample points are drawn from.
//
// kIntegerBox: every coordinate an integer in [lo, hi].
// kPerfectSquareRadius: the last three coordinates are a signed permutation
// of an integer vector with integer length (1,2,2), (2,3,6), ... scaled by
// small factors, so sqrt(r^2) stays rational; earlier coordinates come from
// the integer box. Radii listed in `excluded_radii` are skipped.
struct SampleDomain {
  enum class Kind { kIntegerBox, kPerfectSquareRadius };
  Kind kind = Kind::kIntegerBox;
  int lo = -5;
  int hi = 5;
  std::vector<Rational> excluded_radii;

  std::string describe() const;
};

struct EqualityPolicy {
  std::size_t sample_count = 8;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  SampleDomain domain;
};

// Deterministic in (policy.seed, policy.domain, dim, count).
std::vector<Point> sample_points(const EqualityPolicy& policy, std::size_t dim,
                                 std::size_t count);

struct FieldComparison {
  bool equal = true;
  double worst_residual = 0.0;
  std::vector<Point> witness;  // the worst sample, when sampling was used
};

// Exact for two polynomials. Otherwise the difference is tested structurally
// and then by sampling: points where either side is singular are skipped and
// replaced; IncomparableBackends when no usable sample point exists.
FieldComparison compare(const ScalarField& a, const ScalarField& b,
                        const EqualityPolicy& policy);
bool equals(const ScalarField& a, const ScalarField& b,
            const EqualityPolicy& policy);

}  // namespace cochain
