#include <catch_amalgamated.hpp>

#include <vector>

#include "cochain/complex.hpp"
#include "cochain/errors.hpp"
#include "cochain/kernels.hpp"
#include "cochain/permutation.hpp"
#include "cochain/random.hpp"
#include "support.hpp"

using namespace cochain;
using test::from_sparse;
using test::same;

namespace {

CochainElement member(Tensor t, Space s) { return CochainElement::make(std::move(t), s); }

// Cyclic alternating sum written out by hand for ranks 3 and 4.
bool cyclic_sum_vanishes(const Tensor& s) {
  const std::size_t d = s.dim();
  if (s.rank() == 3) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          ScalarField sum = s.at({a, b, c}) + s.at({b, c, a}) + s.at({c, a, b});
          if (!sum.is_zero()) return false;
        }
    return true;
  }
  REQUIRE(s.rank() == 4);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          ScalarField sum =
              s.at({a, b, c, e}) - s.at({b, c, e, a}) + s.at({c, e, a, b}) - s.at({e, a, b, c});
          if (!sum.is_zero()) return false;
        }
  return true;
}

// The K(2) element from the worked example: T_010 = 1, T_100 = -1.
Tensor small_k2() { return from_sparse(2, 3, {{{0, 1, 0}, "1"}, {{1, 0, 0}, "-1"}}); }

}  // namespace

TEST_CASE("permutations and cyclic shifts", "[permutation]") {
  const auto perms = all_permutations(4);
  CHECK(perms.size() == 24);
  int sign_sum = 0;
  for (const auto& p : perms) sign_sum += p.sign;
  CHECK(sign_sum == 0);

  std::vector<std::size_t> v{2, 0, 1};
  CHECK(sorting_sign(v) == 1);
  std::vector<std::size_t> w{1, 0, 2};
  CHECK(sorting_sign(w) == -1);
  std::vector<std::size_t> r{1, 1, 2};
  CHECK(sorting_sign(r) == 0);

  for (std::size_t n = 1; n <= 5; ++n) {
    const CyclicPermutation full(n, n + 1);
    for (std::size_t k = 0; k <= n; ++k) CHECK(full(k) == k);
    const CyclicPermutation one(n, 1);
    CHECK(one(n) == 0);
  }
}

TEST_CASE("d_nabla: worked examples", "[complex]") {
  const Tensor t = from_sparse(2, 2, {{{0, 1}, "x1"}});
  const Tensor expected = from_sparse(2, 3, {{{0, 1, 1}, "-1/2"}, {{1, 0, 1}, "1/2"}});
  CHECK(same(d_nabla(t), expected));

  CHECK(d_nabla(from_sparse(3, 3, {{{0, 1, 2}, "4"}})).is_zero());

  Rng rng(1);
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    const Tensor r = random_tensor(rng, 3, rank);
    CHECK(d_nabla(d_nabla(r)).is_zero());
  }
}

TEST_CASE("is_member: worked examples", "[complex]") {
  Rng rng(2);
  const Tensor sym = kernels::symmetrize_pair(random_tensor(rng, 3, 2), 0, 1);
  CHECK(is_member(sym, Space::K(1)));
  CHECK(is_member(sym, Space::G(1)));
  CHECK_FALSE(is_member(random_tensor(rng, 3, 2), Space::K(1)));

  Tensor fully(3, 3);
  const ScalarField x0 = ScalarField::coordinate(3, 0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) fully.set({a, b, c}, x0);
  CHECK_FALSE(is_member(fully, Space::G(2)));
  const MembershipReport report = check_membership(fully, Space::G(2));
  CHECK_FALSE(report.failed_condition.empty());
  CHECK(report.witness_index.size() == 3);
  CHECK(is_member(Tensor(3, 3), Space::G(2)));

  for (int trial = 0; trial < 10; ++trial) {
    const CochainElement k = project_to_K(random_tensor(rng, 3, 3), 2);
    CHECK(is_member(phi(k).tensor(), Space::G(2)));
  }

  CHECK_THROWS_AS(check_membership(sym, Space::K(2)), RankMismatch);
  CHECK_THROWS_AS(check_membership(sym, Space::K(0)), RankMismatch);
  CHECK_THROWS_AS(CochainElement::make(random_tensor(rng, 3, 2), Space::K(1)), InvalidMember);
}

TEST_CASE("membership agrees with the hand-written cyclic sums", "[complex]") {
  Rng rng(3);
  for (std::size_t q = 2; q <= 3; ++q) {
    for (int trial = 0; trial < 10; ++trial) {
      const CochainElement g = random_g_member(rng, 3, q);
      CHECK(cyclic_sum_vanishes(g.tensor()));
      const Tensor noise = kernels::symmetrize_pair(random_tensor(rng, 3, q + 1), q - 1, q);
      CHECK(is_member(noise, Space::G(q)) == cyclic_sum_vanishes(noise));
    }
  }
}

TEST_CASE("project_to_K: worked examples", "[complex]") {
  Rng rng(4);
  for (std::size_t q = 2; q <= 3; ++q) {
    const CochainElement k = random_k_member(rng, 3, q);
    CHECK(same(project_to_K(k.tensor(), q).tensor(), k.tensor()));
  }
  Tensor fully(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) fully.set({a, b, c}, ScalarField::coordinate(3, 1));
  CHECK(project_to_K(fully, 2).tensor().is_zero());

  for (int trial = 0; trial < 10; ++trial) {
    const Tensor r = random_tensor(rng, 3, 3);
    const Tensor p = project_to_K(r, 2).tensor();
    CHECK(same(kernels::skew_symmetrize(p, {0, 1}), p));
    CHECK(kernels::skew_symmetrize(p, {0, 1, 2}).is_zero());
  }
  CHECK_THROWS_AS(project_to_K(fully, 3), RankMismatch);
}

TEST_CASE("d_K: worked examples", "[complex]") {
  const CochainElement affine =
      member(Tensor::scalar(parse_field("(+ (* 3 x0) (* -2 x1) 7)", 2)), Space::K(0));
  CHECK(d_K(affine).tensor().is_zero());

  const CochainElement sq = member(Tensor::scalar(parse_field("(^ x0 2)", 2)), Space::K(0));
  CHECK(same(d_K(sq).tensor(), from_sparse(2, 2, {{{0, 0}, "2"}})));
  CHECK(d_K(sq).space() == Space::K(1));

  Rng rng(5);
  for (std::size_t q = 0; q <= 3; ++q) {
    const CochainElement e = random_k_member(rng, 3, q);
    CHECK(d_K(d_K(e)).tensor().is_zero());
  }
}

TEST_CASE("phi and psi: worked examples", "[complex]") {
  const CochainElement t = member(small_k2(), Space::K(2));
  const CochainElement s = phi(t);
  const Tensor expected = from_sparse(
      2, 3, {{{0, 0, 1}, "1/2"}, {{0, 1, 0}, "1/2"}, {{1, 0, 0}, "-1"}});
  CHECK(same(s.tensor(), expected));
  CHECK(s.space() == Space::G(2));
  CHECK(same(psi(s).tensor(), t.tensor()));

  CHECK(phi(member(Tensor(3, 3), Space::K(2))).tensor().is_zero());
  CHECK(psi(member(Tensor(3, 4), Space::G(3))).tensor().is_zero());

  Rng rng(6);
  const Tensor sym = kernels::symmetrize_pair(random_tensor(rng, 3, 2), 0, 1);
  CHECK(same(phi(member(sym, Space::K(1))).tensor(), sym));
  CHECK(same(psi(member(sym, Space::G(1))).tensor(), sym));
}

TEST_CASE("d_G: worked examples", "[complex]") {
  Rng rng(7);
  for (std::size_t q = 0; q <= 3; ++q) {
    const CochainElement g = random_g_member(rng, 3, q);
    CHECK(d_G(d_G(g)).tensor().is_zero());
  }
  const Tensor eta = from_sparse(4, 2, {{{0, 0}, "1"}, {{1, 1}, "-1"}, {{2, 2}, "-1"}, {{3, 3}, "-1"}});
  CHECK(d_G(member(eta, Space::G(1))).tensor().is_zero());

  for (int trial = 0; trial < 50; ++trial) {
    const CochainElement s = random_g_member(rng, 2 + trial % 3, 1);
    CHECK(same(d_G(s).tensor(), d_G1_explicit(s).tensor()));
  }
}

TEST_CASE("d_G1_explicit: worked examples", "[complex]") {
  CHECK(d_G1_explicit(member(from_sparse(3, 2, {{{1, 1}, "2"}}), Space::G(1))).tensor().is_zero());
  const CochainElement s = member(from_sparse(2, 2, {{{0, 0}, "x1"}}), Space::G(1));
  const Tensor expected =
      from_sparse(2, 3, {{{1, 0, 0}, "1/2"}, {{0, 1, 0}, "-1/4"}, {{0, 0, 1}, "-1/4"}});
  CHECK(same(d_G1_explicit(s).tensor(), expected));
}

TEST_CASE("decomposition identity on G members", "[complex]") {
  Rng rng(8);
  for (std::size_t q = 2; q <= 4; ++q) {
    for (int trial = 0; trial < 10; ++trial) {
      const CochainElement g = random_g_member(rng, 3, q);
      CHECK(g_decomposition_residual(g).is_zero());
    }
  }
  CHECK(g_decomposition_residual(member(Tensor(3, 3), Space::G(2))).is_zero());
  CHECK_THROWS_AS(g_decomposition_residual(member(Tensor(3, 2), Space::G(1))), BadParameter);
}

TEST_CASE("property sweep: dims 2-4, grades 0-3", "[complex][property]") {
  Rng rng(9);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    for (std::size_t q = 0; q <= 3; ++q) {
      for (int trial = 0; trial < 8; ++trial) {
        INFO("dim " << dim << " grade " << q << " trial " << trial);
        const CochainElement e = random_k_member(rng, dim, q);
        const CochainElement de = d_K(e);
        CHECK(is_member(de.tensor(), Space::K(q + 1)));
        CHECK(d_K(de).tensor().is_zero());
        const CochainElement s = phi(e);
        CHECK(is_member(s.tensor(), Space::G(q)));
        CHECK(same(psi(s).tensor(), e.tensor()));

        const CochainElement g = random_g_member(rng, dim, q);
        const CochainElement pg = psi(g);
        CHECK(is_member(pg.tensor(), Space::K(q)));
        CHECK(same(phi(pg).tensor(), g.tensor()));
        CHECK(is_member(d_G(g).tensor(), Space::G(q + 1)));
      }
    }
  }
}

TEST_CASE("random members are not trivially zero", "[complex][property]") {
  Rng rng(10);
  int nonzero = 0;
  for (std::size_t q = 0; q <= 3; ++q) {
    for (int trial = 0; trial < 5; ++trial) {
      if (!random_k_member(rng, 4, q).tensor().is_zero()) ++nonzero;
      if (!d_K(random_k_member(rng, 4, q)).tensor().is_zero()) ++nonzero;
    }
  }
  CHECK(nonzero >= 35);
  // K(q) vanishes once q exceeds the dimension.
  CHECK(d_K(random_k_member(rng, 3, 3)).tensor().is_zero());
}
