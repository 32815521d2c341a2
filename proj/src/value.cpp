#include "cochain/value.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cochain/errors.hpp"

namespace cochain {

double Value::to_double() const {
  if (is_exact()) return exact().get_d();
  return std::get<double>(v_);
}

bool Value::is_zero() const {
  if (is_exact()) return sgn(exact()) == 0;
  return std::get<double>(v_) == 0.0;
}

std::string Value::to_string() const {
  if (is_exact()) return cochain::to_string(exact());
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(v_);
  return os.str();
}

Value operator+(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() + b.exact()));
  return Value(a.to_double() + b.to_double());
}

Value operator-(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() - b.exact()));
  return Value(a.to_double() - b.to_double());
}

Value operator*(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() * b.exact()));
  return Value(a.to_double() * b.to_double());
}

Value operator/(const Value& a, const Value& b) {
  if (b.is_zero()) throw SingularPoint("division by zero");
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() / b.exact()));
  return Value(a.to_double() / b.to_double());
}

Value Value::operator-() const {
  if (is_exact()) return Value(Rational(-exact()));
  return Value(-std::get<double>(v_));
}

Value pow(const Value& base, int exponent) {
  if (exponent < 0 && base.is_zero()) throw SingularPoint("negative power of zero");
  if (base.is_exact()) {
    Rational r(1);
    const unsigned n = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(r.get_num_mpz_t(), base.exact().get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.exact().get_den_mpz_t(), n);
    r.canonicalize();
    if (exponent < 0) r = 1 / r;
    return Value(r);
  }
  return Value(std::pow(base.to_double(), exponent));
}

Value sqrt(const Value& x) {
  if (x.is_exact()) {
    if (sgn(x.exact()) < 0) throw SingularPoint("sqrt of a negative number");
    Rational root;
    if (exact_sqrt(x.exact(), root)) return Value(root);
  }
  const double d = x.to_double();
  if (d < 0) throw SingularPoint("sqrt of a negative number");
  return Value(std::sqrt(d));
}

Value log(const Value& x) {
  if (x.is_exact()) {
    if (sgn(x.exact()) <= 0) throw SingularPoint("log of a non-positive number");
    if (x.exact() == 1) return Value(Rational(0));
  }
  const double d = x.to_double();
  if (d <= 0) throw SingularPoint("log of a non-positive number");
  return Value(std::log(d));
}

double relative_residual(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.exact() == b.exact()) return 0.0;
    Rational diff = abs(a.exact() - b.exact());
    Rational scale = std::max({Rational(1), Rational(abs(a.exact())), Rational(abs(b.exact()))});
    return Rational(diff / scale).get_d();
  }
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) / scale;
}

}  // namespace cochain
