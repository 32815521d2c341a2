#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cochain/polynomial.hpp"
#include "cochain/rational.hpp"
#include "cochain/value.hpp"

namespace cochain {

// Immutable symbolic expression in coordinates x0..x{d-1}.
//
// Nodes are shared, so an Expr is a cheap handle onto a DAG. Constructors do
// constant folding and like-term collection and nothing more; deciding
// whether two expressions agree is the job of equals() in field.hpp.
class Expr {
 public:
  enum class Kind {
    kConst,
    kCoord,
    kSum,
    kProduct,
    kQuotient,
    kIntPow,
    kSqrt,
    kLog,
    // A function known only through its derivative: d/dx_a P(h, v) = h * dv/dx_a.
    kPrimitive,
  };

  struct Node;

  Expr();  // the constant 0

  static Expr constant(const Rational& value);
  static Expr constant(long value) { return constant(Rational(value)); }
  static Expr coord(std::size_t axis);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(const Expr& numerator, const Expr& denominator);
  static Expr int_pow(const Expr& base, int exponent);
  static Expr sqrt(const Expr& arg);
  static Expr log(const Expr& arg);
  static Expr primitive(const Expr& integrand, const Expr& variable);
  static Expr from_polynomial(const Polynomial& p);

  Kind kind() const;
  // Only meaningful for kConst / kCoord / kIntPow respectively.
  const Rational& const_value() const;
  std::size_t axis() const;
  int exponent() const;
  const std::vector<Expr>& children() const;

  bool is_const() const { return kind() == Kind::kConst; }
  bool is_zero() const;
  bool is_one() const;
  // Largest coordinate index referenced plus one.
  std::size_t min_dim() const;
  bool contains_primitive() const;

  Expr differentiate(std::size_t axis) const;
  // Throws SingularPoint or Unevaluable.
  Value evaluate(std::span<const Rational> point) const;
  // Replaces coordinate `axis` by `replacement` everywhere; used to compose
  // one-variable profiles f(H) with a field H(x).
  Expr substitute(std::size_t axis, const Expr& replacement) const;
  // Polynomial view, when the tree only uses +, *, constant quotients and
  // non-negative integer powers.
  std::optional<Polynomial> to_polynomial(std::size_t dim) const;

  // Prefix s-expression; coordinates printed with `names` (x0.. by default).
  std::string to_sexpr(std::span<const std::string> names = {}) const;

  friend bool structurally_equal(const Expr& a, const Expr& b);
  std::size_t hash() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  const Node* node() const { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  Rational value;  // kConst
  std::size_t axis = 0;  // kCoord
  int exponent = 0;  // kIntPow
  std::vector<Expr> children;
  std::size_t hash = 0;
  std::size_t min_dim = 0;
  bool has_primitive = false;
};

}  // namespace cochain
