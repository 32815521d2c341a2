#include "cochain/rational.hpp"

#include <cctype>
#include <string>

#include "cochain/errors.hpp"

namespace cochain {

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace cochain
