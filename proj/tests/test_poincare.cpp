#include <catch_amalgamated.hpp>

#include <vector>

#include "cochain/errors.hpp"
#include "cochain/kernels.hpp"
#include "cochain/poincare.hpp"
#include "cochain/random.hpp"
#include "support.hpp"

using namespace cochain;
using test::from_sparse;
using test::same;

namespace {

Tensor random_form(Rng& rng, std::size_t dim, std::size_t p) {
  return kernels::skew_symmetrize_leading(random_tensor(rng, dim, p), p);
}

}  // namespace

TEST_CASE("exterior derivative of a 1-form matches the hand formula", "[poincare]") {
  Rng rng(1);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const Tensor w = random_tensor(rng, dim, 1);
    const Tensor dw = exterior_derivative(w, 1);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        const ScalarField hand =
            Rational(1, 2) * (w.at({b}).differentiate(a) - w.at({a}).differentiate(b));
        CHECK((dw.at({a, b}) - hand).is_zero());
      }
    }
  }
}

TEST_CASE("de_rham_homotopy: worked examples", "[poincare]") {
  const Tensor w = from_sparse(2, 1, {{{0}, "x1"}, {{1}, "x0"}});
  const Tensor h = de_rham_homotopy(w, 1);
  REQUIRE(h.rank() == 0);
  CHECK(h.value().polynomial() == parse_field("(* x0 x1)", 2).polynomial());

  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f(random_polynomial(rng, 3));
    const Tensor df = exterior_derivative(Tensor::scalar(f), 0);
    const Tensor hf = de_rham_homotopy(df, 1);
    CHECK((hf.value() - f).polynomial().is_constant());
    CHECK(same(exterior_derivative(hf, 0), df));
  }
  CHECK(de_rham_homotopy(Tensor(3, 2), 2).is_zero());
}

TEST_CASE("de_rham_homotopy rejects non-closed and non-polynomial input", "[poincare]") {
  const Tensor w = from_sparse(2, 1, {{{0}, "x1"}});
  try {
    de_rham_homotopy(w, 1);
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    CHECK_FALSE(e.residual().is_zero());
    CHECK(e.witness().size() == 2);
  }
  const Tensor e = from_sparse(2, 1, {{{0}, "(sqrt (+ 1 (^ x0 2)))"}});
  CHECK_THROWS_AS(de_rham_homotopy(e, 1), NonPolynomial);
}

TEST_CASE("homotopy identity d h + h d = id", "[poincare][property]") {
  Rng rng(3);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (int trial = 0; trial < 10; ++trial) {
        const Tensor w = random_form(rng, dim, p);
        const Tensor dh = exterior_derivative(homotopy(w, p), p - 1);
        const Tensor hd = homotopy(exterior_derivative(w, p), p + 1);
        INFO("dim " << dim << " p " << p);
        CHECK(same(dh + hd, w));
      }
    }
  }
}

TEST_CASE("homotopy on functions returns f - f(0)", "[poincare]") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_polynomial(rng, 3);
    const Tensor hd = homotopy(exterior_derivative(Tensor::scalar(ScalarField(f)), 0), 1);
    const Rational f0 = ScalarField(f).evaluate(Point{{0, 0, 0}}).exact();
    CHECK(hd.value().polynomial() == f - Polynomial::constant(3, f0));
  }
}

TEST_CASE("homotopy acts per trailing slot", "[poincare]") {
  Rng rng(5);
  Tensor family = kernels::skew_symmetrize_leading(random_tensor(rng, 3, 3), 2);
  const Tensor h = homotopy(family, 2);
  REQUIRE(h.rank() == 2);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    Tensor slice(3, 2);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) slice.set({a, b}, family.at({a, b, nu}));
    const Tensor hs = homotopy(slice, 2);
    for (std::size_t a = 0; a < 3; ++a) CHECK((hs.at({a}) - h.at({a, nu})).is_zero());
  }
}

TEST_CASE("solve_potential: worked examples", "[poincare]") {
  const CochainElement f =
      CochainElement::make(Tensor::scalar(parse_field("(^ x0 3)", 2)), Space::K(0));
  const CochainElement t = d_K(f);
  const PotentialResult r = solve_potential(t);
  CHECK(r.potential.space() == Space::K(0));
  CHECK(same(d_K(r.potential).tensor(), t.tensor()));
  CHECK(r.residual == 0.0);
  CHECK((r.potential.tensor().value() - f.tensor().value()).polynomial().degree() <= 1);

  const PotentialResult zero = solve_potential(CochainElement::make(Tensor(3, 3), Space::K(2)));
  CHECK(zero.potential.tensor().is_zero());
}

TEST_CASE("solve_potential round trip", "[poincare][property]") {
  Rng rng(6);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (int trial = 0; trial < 10; ++trial) {
        const CochainElement e = random_k_member(rng, dim, q - 1);
        const CochainElement t = d_K(e);
        const PotentialResult r = solve_potential(t);
        INFO("dim " << dim << " q " << q << " trial " << trial);
        CHECK(r.potential.space() == Space::K(q - 1));
        CHECK(same(d_K(r.potential).tensor(), t.tensor()));
        CHECK(r.residual == 0.0);
        CHECK(is_member(r.potential.tensor(), Space::K(q - 1)));
        if (q >= 2) {
          CHECK(kernels::skew_symmetrize_leading(r.potential.tensor(), q).is_zero());
        }
      }
    }
  }
}

TEST_CASE("solve_potential rejects open input", "[poincare]") {
  const CochainElement t =
      CochainElement::make(from_sparse(2, 2, {{{0, 0}, "x1"}}), Space::K(1));
  CHECK_THROWS_AS(solve_potential(t), NotClosed);
  const CochainElement s = CochainElement::make(Tensor::scalar(ScalarField(2)), Space::K(0));
  CHECK_THROWS_AS(solve_potential(s), BadParameter);
}

TEST_CASE("affine_kernel_basis: worked examples", "[poincare]") {
  const auto b3 = affine_kernel_basis(3);
  CHECK(b3.size() == 4);
  CHECK(coefficient_rank(b3) == 4);
  for (const auto& b : b3) {
    CHECK(d_K(CochainElement::make(Tensor::scalar(b), Space::K(0))).tensor().is_zero());
  }
  const auto b1 = affine_kernel_basis(1);
  CHECK(b1.size() == 2);

  std::vector<ScalarField> dependent{parse_field("(+ 1 x0)", 2), parse_field("x0", 2),
                                     parse_field("1", 2)};
  CHECK(coefficient_rank(dependent) == 2);
}
