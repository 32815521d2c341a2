#include "cochain/sexpr.hpp"

#include <cctype>

#include "cochain/errors.hpp"

namespace cochain {

std::vector<std::string> coordinate_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names, bool time_alias)
      : text_(text), names_(names), time_alias_(time_alias) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("s-expression error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a token");
    return text_.substr(start, pos_ - start);
  }

  static bool looks_numeric(std::string_view tok) {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    return i < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[i])) || tok[i] == '.');
  }

  Expr atom(std::string_view tok) {
    if (looks_numeric(tok)) {
      try {
        return Expr::constant(parse_rational(tok));
      } catch (const ParseError&) {
        fail("malformed number '" + std::string(tok) + "'");
      }
    }
    if (time_alias_ && tok == "t") return Expr::coord(0);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == tok) return Expr::coord(i);
    }
    fail("unknown symbol '" + std::string(tok) + "'");
  }

  Expr parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return atom(token());
    ++pos_;
    const std::size_t op_pos = pos_;
    const std::string op(token());
    std::vector<Expr> args;
    std::string exponent_token;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (op == "^" && args.size() == 1) {
        exponent_token = std::string(token());
        args.push_back(Expr());
        continue;
      }
      args.push_back(parse_expr());
    }
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) {
        pos_ = op_pos;
        fail("wrong number of arguments for '" + op + "'");
      }
    };
    if (op == "+") {
      arity(1, SIZE_MAX);
      return Expr::sum(std::move(args));
    }
    if (op == "*") {
      arity(1, SIZE_MAX);
      return Expr::product(std::move(args));
    }
    if (op == "-") {
      arity(1, SIZE_MAX);
      if (args.size() == 1) return -args[0];
      std::vector<Expr> terms{args[0]};
      for (std::size_t i = 1; i < args.size(); ++i) terms.push_back(-args[i]);
      return Expr::sum(std::move(terms));
    }
    if (op == "/") {
      arity(2, 2);
      try {
        return Expr::quotient(args[0], args[1]);
      } catch (const SingularPoint&) {
        pos_ = op_pos;
        fail("division by zero");
      }
    }
    if (op == "^") {
      arity(2, 2);
      Rational n;
      try {
        n = parse_rational(exponent_token);
      } catch (const ParseError&) {
        pos_ = op_pos;
        fail("exponent must be an integer literal");
      }
      if (n.get_den() != 1 || !n.get_num().fits_sint_p()) {
        pos_ = op_pos;
        fail("exponent must be an integer literal");
      }
      if (args[0].is_zero() && sgn(n) < 0) {
        pos_ = op_pos;
        fail("negative power of zero");
      }
      return Expr::int_pow(args[0], static_cast<int>(n.get_num().get_si()));
    }
    if (op == "sqrt") {
      arity(1, 1);
      return Expr::sqrt(args[0]);
    }
    if (op == "log") {
      arity(1, 1);
      return Expr::log(args[0]);
    }
    if (op == "prim") {
      arity(2, 2);
      return Expr::primitive(args[0], args[1]);
    }
    pos_ = op_pos;
    fail("unknown operator '" + op + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  bool time_alias_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_sexpr(std::string_view text, std::span<const std::string> names, bool time_alias) {
  return Parser(text, names, time_alias).parse_all();
}

ScalarField parse_field(std::string_view text, std::size_t dim) {
  const auto names = coordinate_names(dim);
  Expr e = parse_sexpr(text, names, dim == 4);
  if (auto p = e.to_polynomial(dim)) return ScalarField(std::move(*p));
  return ScalarField(dim, std::move(e));
}

}  // namespace cochain
