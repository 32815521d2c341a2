#include "cochain/expr.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "cochain/errors.hpp"

namespace cochain {

using Kind = Expr::Kind;

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& r) {
  return mix(std::hash<long>{}(mpz_get_si(r.get_num_mpz_t())),
             std::hash<long>{}(mpz_get_si(r.get_den_mpz_t())));
}

}  // namespace

// Every node goes through here so cached metadata stays consistent.
static std::shared_ptr<const Expr::Node> make_node(Kind kind, Rational value, std::size_t axis,
                                                   int exponent, std::vector<Expr> children) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->value = std::move(value);
  n->axis = axis;
  n->exponent = exponent;
  n->children = std::move(children);
  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  switch (kind) {
    case Kind::kConst:
      h = mix(h, hash_rational(n->value));
      break;
    case Kind::kCoord:
      h = mix(h, axis);
      n->min_dim = axis + 1;
      break;
    case Kind::kIntPow:
      h = mix(h, std::hash<int>{}(exponent));
      break;
    case Kind::kPrimitive:
      n->has_primitive = true;
      break;
    default:
      break;
  }
  for (const auto& c : n->children) {
    h = mix(h, c.hash());
    n->min_dim = std::max(n->min_dim, c.min_dim());
    n->has_primitive = n->has_primitive || c.contains_primitive();
  }
  n->hash = h;
  return n;
}

Expr::Expr() : node_(make_node(Kind::kConst, Rational(0), 0, 0, {})) {}

Expr Expr::constant(const Rational& value) {
  return Expr(make_node(Kind::kConst, value, 0, 0, {}));
}

Expr Expr::coord(std::size_t axis) {
  return Expr(make_node(Kind::kCoord, Rational(0), axis, 0, {}));
}

Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::const_value() const { return node_->value; }
std::size_t Expr::axis() const { return node_->axis; }
int Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
bool Expr::is_zero() const { return is_const() && sgn(node_->value) == 0; }
bool Expr::is_one() const { return is_const() && node_->value == 1; }
std::size_t Expr::min_dim() const { return node_->min_dim; }
bool Expr::contains_primitive() const { return node_->has_primitive; }
std::size_t Expr::hash() const { return node_->hash; }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.children.size() != y.children.size()) {
    return false;
  }
  switch (x.kind) {
    case Kind::kConst:
      if (x.value != y.value) return false;
      break;
    case Kind::kCoord:
      if (x.axis != y.axis) return false;
      break;
    case Kind::kIntPow:
      if (x.exponent != y.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!structurally_equal(x.children[i], y.children[i])) return false;
  }
  return true;
}

namespace {

// Buckets keyed by hash with structural comparison inside a bucket; keeps
// insertion order so simplification output is deterministic.
template <typename Payload>
class LikeTermTable {
 public:
  Payload& slot(const Expr& key, const Payload& init) {
    auto& bucket = index_[key.hash()];
    for (std::size_t i : bucket) {
      if (structurally_equal(entries_[i].first, key)) return entries_[i].second;
    }
    bucket.push_back(entries_.size());
    entries_.emplace_back(key, init);
    return entries_.back().second;
  }
  std::vector<std::pair<Expr, Payload>>& entries() { return entries_; }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
  std::vector<std::pair<Expr, Payload>> entries_;
};

}  // namespace

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (t.kind() == Kind::kSum) {
      for (const auto& c : t.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(t));
    }
  }
  Rational constant_part(0);
  LikeTermTable<Rational> table;
  for (const auto& t : flat) {
    if (t.is_const()) {
      constant_part += t.const_value();
      continue;
    }
    if (t.kind() == Kind::kProduct && t.children().front().is_const()) {
      const auto& cs = t.children();
      std::vector<Expr> rest(cs.begin() + 1, cs.end());
      Expr base = rest.size() == 1 ? rest.front()
                                   : Expr(make_node(Kind::kProduct, Rational(0), 0, 0, rest));
      table.slot(base, Rational(0)) += cs.front().const_value();
    } else {
      table.slot(t, Rational(0)) += 1;
    }
  }
  std::vector<Expr> out;
  if (sgn(constant_part) != 0) out.push_back(constant(constant_part));
  for (auto& [base, coeff] : table.entries()) {
    if (sgn(coeff) == 0) continue;
    out.push_back(coeff == 1 ? base : product({constant(coeff), base}));
  }
  if (out.empty()) return Expr();
  if (out.size() == 1) return out.front();
  return Expr(make_node(Kind::kSum, Rational(0), 0, 0, std::move(out)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind() == Kind::kProduct) {
      for (const auto& c : f.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  Rational constant_part(1);
  LikeTermTable<int> table;
  for (const auto& f : flat) {
    if (f.is_const()) {
      constant_part *= f.const_value();
    } else if (f.kind() == Kind::kIntPow) {
      table.slot(f.children().front(), 0) += f.exponent();
    } else {
      table.slot(f, 0) += 1;
    }
  }
  if (sgn(constant_part) == 0) return Expr();
  std::vector<Expr> out;
  if (constant_part != 1) out.push_back(constant(constant_part));
  for (auto& [base, power] : table.entries()) {
    if (power == 0) continue;
    out.push_back(int_pow(base, power));
  }
  if (out.empty()) return constant(constant_part);
  if (out.size() == 1) return out.front();
  return Expr(make_node(Kind::kProduct, Rational(0), 0, 0, std::move(out)));
}

Expr Expr::quotient(const Expr& numerator, const Expr& denominator) {
  if (denominator.is_zero()) throw SingularPoint("quotient by the zero expression");
  if (numerator.is_zero()) return Expr();
  if (denominator.is_const()) {
    return product({numerator, constant(Rational(1 / denominator.const_value()))});
  }
  return Expr(make_node(Kind::kQuotient, Rational(0), 0, 0, {numerator, denominator}));
}

Expr Expr::int_pow(const Expr& base, int exponent) {
  if (exponent == 0) return constant(1);
  if (exponent == 1) return base;
  if (base.is_const()) {
    return constant(pow(Value(base.const_value()), exponent).exact());
  }
  if (base.kind() == Kind::kIntPow) {
    return int_pow(base.children().front(), base.exponent() * exponent);
  }
  return Expr(make_node(Kind::kIntPow, Rational(0), 0, exponent, {base}));
}

Expr Expr::sqrt(const Expr& arg) {
  if (arg.is_const()) {
    Rational root;
    if (exact_sqrt(arg.const_value(), root)) return constant(root);
  }
  return Expr(make_node(Kind::kSqrt, Rational(0), 0, 0, {arg}));
}

Expr Expr::log(const Expr& arg) {
  if (arg.is_one()) return Expr();
  return Expr(make_node(Kind::kLog, Rational(0), 0, 0, {arg}));
}

Expr Expr::primitive(const Expr& integrand, const Expr& variable) {
  return Expr(make_node(Kind::kPrimitive, Rational(0), 0, 0, {integrand, variable}));
}

Expr Expr::from_polynomial(const Polynomial& p) {
  std::vector<Expr> terms;
  for (const auto& t : p.terms()) {
    std::vector<Expr> factors{constant(t.coeff)};
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (t.exps[k] > 0) factors.push_back(int_pow(coord(k), t.exps[k]));
    }
    terms.push_back(product(std::move(factors)));
  }
  return sum(std::move(terms));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::quotient(a, b); }
Expr Expr::operator-() const { return product({constant(-1), *this}); }

namespace {

using Memo = std::unordered_map<const Expr::Node*, Expr>;

Expr diff(const Expr& e, std::size_t axis, Memo& memo) {
  if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
  Expr out;
  const auto& cs = e.children();
  switch (e.kind()) {
    case Kind::kConst:
      break;
    case Kind::kCoord:
      out = Expr::constant(e.axis() == axis ? 1 : 0);
      break;
    case Kind::kSum: {
      std::vector<Expr> terms;
      for (const auto& c : cs) terms.push_back(diff(c, axis, memo));
      out = Expr::sum(std::move(terms));
      break;
    }
    case Kind::kProduct: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        Expr d = diff(cs[i], axis, memo);
        if (d.is_zero()) continue;
        std::vector<Expr> factors{d};
        for (std::size_t j = 0; j < cs.size(); ++j) {
          if (j != i) factors.push_back(cs[j]);
        }
        terms.push_back(Expr::product(std::move(factors)));
      }
      out = Expr::sum(std::move(terms));
      break;
    }
    case Kind::kQuotient: {
      const Expr& a = cs[0];
      const Expr& b = cs[1];
      Expr da = diff(a, axis, memo);
      Expr db = diff(b, axis, memo);
      out = Expr::quotient(da * b - a * db, Expr::int_pow(b, 2));
      break;
    }
    case Kind::kIntPow: {
      const Expr& b = cs[0];
      out = Expr::product({Expr::constant(e.exponent()), Expr::int_pow(b, e.exponent() - 1),
                           diff(b, axis, memo)});
      break;
    }
    case Kind::kSqrt:
      out = Expr::quotient(diff(cs[0], axis, memo), Expr::constant(2) * e);
      break;
    case Kind::kLog:
      out = Expr::quotient(diff(cs[0], axis, memo), cs[0]);
      break;
    case Kind::kPrimitive:
      out = cs[0] * diff(cs[1], axis, memo);
      break;
  }
  memo.emplace(e.node(), out);
  return out;
}

using ValueMemo = std::unordered_map<const Expr::Node*, Value>;

Value eval(const Expr& e, std::span<const Rational> point, ValueMemo& memo) {
  if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
  Value out;
  const auto& cs = e.children();
  switch (e.kind()) {
    case Kind::kConst:
      out = Value(e.const_value());
      break;
    case Kind::kCoord:
      if (e.axis() >= point.size()) throw BadParameter("point has too few coordinates");
      out = Value(point[e.axis()]);
      break;
    case Kind::kSum:
      out = Value(Rational(0));
      for (const auto& c : cs) out = out + eval(c, point, memo);
      break;
    case Kind::kProduct:
      out = Value(Rational(1));
      for (const auto& c : cs) out = out * eval(c, point, memo);
      break;
    case Kind::kQuotient:
      out = eval(cs[0], point, memo) / eval(cs[1], point, memo);
      break;
    case Kind::kIntPow:
      out = pow(eval(cs[0], point, memo), e.exponent());
      break;
    case Kind::kSqrt:
      out = sqrt(eval(cs[0], point, memo));
      break;
    case Kind::kLog:
      out = log(eval(cs[0], point, memo));
      break;
    case Kind::kPrimitive:
      throw Unevaluable("formal primitive cannot be evaluated");
  }
  memo.emplace(e.node(), out);
  return out;
}

Expr rebuild(const Expr& e, std::vector<Expr> cs) {
  switch (e.kind()) {
    case Kind::kSum:
      return Expr::sum(std::move(cs));
    case Kind::kProduct:
      return Expr::product(std::move(cs));
    case Kind::kQuotient:
      return Expr::quotient(cs[0], cs[1]);
    case Kind::kIntPow:
      return Expr::int_pow(cs[0], e.exponent());
    case Kind::kSqrt:
      return Expr::sqrt(cs[0]);
    case Kind::kLog:
      return Expr::log(cs[0]);
    case Kind::kPrimitive:
      return Expr::primitive(cs[0], cs[1]);
    default:
      return e;
  }
}

Expr subst(const Expr& e, std::size_t axis, const Expr& repl, Memo& memo) {
  if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
  Expr out;
  if (e.kind() == Kind::kCoord) {
    out = e.axis() == axis ? repl : e;
  } else if (e.is_const()) {
    out = e;
  } else {
    std::vector<Expr> cs;
    for (const auto& c : e.children()) cs.push_back(subst(c, axis, repl, memo));
    out = rebuild(e, std::move(cs));
  }
  memo.emplace(e.node(), out);
  return out;
}

std::optional<Polynomial> to_poly(const Expr& e, std::size_t dim) {
  const auto& cs = e.children();
  switch (e.kind()) {
    case Kind::kConst:
      return Polynomial::constant(dim, e.const_value());
    case Kind::kCoord:
      if (e.axis() >= dim) return std::nullopt;
      return Polynomial::coordinate(dim, e.axis());
    case Kind::kSum: {
      Polynomial acc(dim);
      for (const auto& c : cs) {
        auto p = to_poly(c, dim);
        if (!p) return std::nullopt;
        acc += *p;
      }
      return acc;
    }
    case Kind::kProduct: {
      Polynomial acc = Polynomial::constant(dim, Rational(1));
      for (const auto& c : cs) {
        auto p = to_poly(c, dim);
        if (!p) return std::nullopt;
        acc = acc * *p;
      }
      return acc;
    }
    case Kind::kQuotient: {
      auto num = to_poly(cs[0], dim);
      auto den = to_poly(cs[1], dim);
      if (!num || !den || !den->is_constant() || den->is_zero()) return std::nullopt;
      return *num * Rational(1 / den->terms().front().coeff);
    }
    case Kind::kIntPow: {
      if (e.exponent() < 0) return std::nullopt;
      auto b = to_poly(cs[0], dim);
      if (!b) return std::nullopt;
      return b->pow(static_cast<unsigned>(e.exponent()));
    }
    default:
      return std::nullopt;
  }
}

void print(const Expr& e, std::span<const std::string> names, std::string& out) {
  auto list = [&](const char* op) {
    out += '(';
    out += op;
    for (const auto& c : e.children()) {
      out += ' ';
      print(c, names, out);
    }
    out += ')';
  };
  switch (e.kind()) {
    case Kind::kConst:
      out += to_string(e.const_value());
      break;
    case Kind::kCoord:
      if (e.axis() < names.size()) {
        out += names[e.axis()];
      } else {
        out += "x" + std::to_string(e.axis());
      }
      break;
    case Kind::kSum:
      list("+");
      break;
    case Kind::kProduct:
      list("*");
      break;
    case Kind::kQuotient:
      list("/");
      break;
    case Kind::kIntPow:
      out += "(^ ";
      print(e.children()[0], names, out);
      out += ' ' + std::to_string(e.exponent()) + ')';
      break;
    case Kind::kSqrt:
      list("sqrt");
      break;
    case Kind::kLog:
      list("log");
      break;
    case Kind::kPrimitive:
      list("prim");
      break;
  }
}

}  // namespace

Expr Expr::differentiate(std::size_t axis) const {
  Memo memo;
  return diff(*this, axis, memo);
}

Value Expr::evaluate(std::span<const Rational> point) const {
  ValueMemo memo;
  return eval(*this, point, memo);
}

Expr Expr::substitute(std::size_t axis, const Expr& replacement) const {
  Memo memo;
  return subst(*this, axis, replacement, memo);
}

std::optional<Polynomial> Expr::to_polynomial(std::size_t dim) const {
  if (min_dim() > dim) return std::nullopt;
  return to_poly(*this, dim);
}

std::string Expr::to_sexpr(std::span<const std::string> names) const {
  std::string out;
  print(*this, names, out);
  return out;
}

}  // namespace cochain
