#include "cochain/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "cochain/errors.hpp"

namespace cochain {

unsigned total_degree(const Exponents& exps) {
  unsigned deg = 0;
  for (auto e : exps) deg += e;
  return deg;
}

namespace {

bool term_less(const Term& a, const Term& b) { return a.exps < b.exps; }

void check_dim(std::size_t dim) {
  if (dim > kMaxDim) {
    throw BadParameter("polynomial dimension exceeds " + std::to_string(kMaxDim));
  }
}

}  // namespace

Polynomial::Polynomial(std::size_t dim) : dim_(dim) { check_dim(dim); }

Polynomial Polynomial::constant(std::size_t dim, const Rational& value) {
  return monomial(dim, Exponents{}, value);
}

Polynomial Polynomial::coordinate(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw BadParameter("coordinate axis out of range");
  Exponents e{};
  e[axis] = 1;
  return monomial(dim, e, Rational(1));
}

Polynomial Polynomial::monomial(std::size_t dim, const Exponents& exps,
                                const Rational& coeff) {
  Polynomial p(dim);
  if (sgn(coeff) != 0) p.terms_.push_back({exps, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t dim, std::vector<Term> terms) {
  Polynomial p(dim);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0);
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, static_cast<int>(total_degree(t.exps)));
  return deg;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Sorted merge of two canonical term lists; sign is +1 or -1 for b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw BadParameter("polynomial dimension mismatch");
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw BadParameter("polynomial dimension mismatch");
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw BadParameter("polynomial dimension mismatch");
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t;
      for (std::size_t k = 0; k < kMaxDim; ++k) {
        const unsigned e = unsigned(x.exps[k]) + y.exps[k];
        if (e > 255) throw BadParameter("polynomial exponent overflow");
        t.exps[k] = static_cast<std::uint8_t>(e);
      }
      t.coeff = x.coeff * y.coeff;
      terms.push_back(std::move(t));
    }
  }
  return Polynomial::from_terms(a.dim_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(dim_, Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::differentiate(std::size_t axis) const {
  if (axis >= dim_) throw BadParameter("differentiation axis out of range");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exps[axis] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[axis];
    d.exps[axis] -= 1;
    terms.push_back(std::move(d));
  }
  // Lowering one exponent can reorder terms, so re-canonicalize.
  return from_terms(dim_, std::move(terms));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_) throw BadParameter("point dimension mismatch");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < dim_; ++k) {
      for (unsigned e = 0; e < t.exps[k]; ++e) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

double Polynomial::max_abs_coefficient() const {
  double worst = 0.0;
  for (const auto& t : terms_) worst = std::max(worst, std::abs(t.coeff.get_d()));
  return worst;
}

Polynomial homotopy_scale_integral(const Polynomial& p, unsigned k) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) {
    t.coeff /= Rational(k + total_degree(t.exps) + 1);
  }
  return Polynomial::from_terms(p.dim(), std::move(terms));
}

}  // namespace cochain
