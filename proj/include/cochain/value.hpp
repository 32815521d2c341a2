#pragma once

#include <string>
#include <variant>

#include "cochain/rational.hpp"

namespace cochain {

// Result of evaluating a field at a point: exact while every intermediate is
// rational, floating as soon as an irrational sqrt or a log shows up.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational r) : v_(std::move(r)) {}
  Value(double d) : v_(d) {}

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const { return std::get<Rational>(v_); }
  double to_double() const;
  bool is_zero() const;
  std::string to_string() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  // Throws SingularPoint on division by zero.
  friend Value operator/(const Value& a, const Value& b);
  Value operator-() const;

 private:
  std::variant<Rational, double> v_;
};

Value pow(const Value& base, int exponent);
Value sqrt(const Value& x);
Value log(const Value& x);

// |a - b| / max(1, |a|, |b|); exactly 0 when both are exact and equal.
double relative_residual(const Value& a, const Value& b);

}  // namespace cochain
