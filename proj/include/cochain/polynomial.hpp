#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cochain/rational.hpp"

namespace cochain {

inline constexpr std::size_t kMaxDim = 8;

// Exponent vector of a monomial; slots past `dim` stay zero.
using Exponents = std::array<std::uint8_t, kMaxDim>;

unsigned total_degree(const Exponents& exps);

struct Term {
  Exponents exps{};
  Rational coeff;
};

// Multivariate polynomial over the rationals in `dim` coordinates.
//
// Terms are kept sorted by exponent vector with no zero coefficients, so two
// polynomials are equal iff their term lists are equal.
class Polynomial {
 public:
  explicit Polynomial(std::size_t dim = 0);

  static Polynomial constant(std::size_t dim, const Rational& value);
  static Polynomial coordinate(std::size_t dim, std::size_t axis);
  static Polynomial monomial(std::size_t dim, const Exponents& exps,
                             const Rational& coeff);
  // Takes arbitrary (unsorted, possibly repeated) terms and canonicalizes.
  static Polynomial from_terms(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;
  Polynomial differentiate(std::size_t axis) const;
  Rational evaluate(std::span<const Rational> point) const;
  // Largest absolute coefficient, used as a residual for exact comparisons.
  double max_abs_coefficient() const;

 private:
  std::size_t dim_;
  std::vector<Term> terms_;
};

// For every monomial m of total degree deg, m -> m / (k + deg + 1). This is
// the ray integral  int_0^1 t^k p(t x) dt  evaluated exactly.
Polynomial homotopy_scale_integral(const Polynomial& p, unsigned k);

}  // namespace cochain
