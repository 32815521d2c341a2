#include <catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "cochain/errors.hpp"
#include "cochain/kernels.hpp"
#include "cochain/random.hpp"
#include "cochain/reference.hpp"
#include "cochain/sexpr.hpp"
#include "support.hpp"

using namespace cochain;
using test::from_sparse;
using test::same;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("skew_symmetrize: worked examples", "[kernels]") {
  Rng rng(1);
  const Tensor r = random_tensor(rng, 3, 2);
  const Tensor sym = kernels::symmetrize_pair(r, 0, 1);
  CHECK(kernels::skew_symmetrize(sym, {0, 1}).is_zero());

  const Tensor skew = kernels::skew_symmetrize(random_tensor(rng, 3, 3), {0, 1, 2});
  CHECK(same(kernels::skew_symmetrize(skew, {0, 1, 2}), skew));

  const Tensor t = from_sparse(2, 2, {{{0, 1}, "x0"}});
  const Tensor expected = from_sparse(2, 2, {{{0, 1}, "(* 1/2 x0)"}, {{1, 0}, "(* -1/2 x0)"}});
  CHECK(same(kernels::skew_symmetrize(t, {0, 1}), expected));
}

TEST_CASE("symmetrize_pair: worked examples", "[kernels]") {
  Rng rng(2);
  const Tensor sym = kernels::symmetrize_pair(random_tensor(rng, 3, 3), 1, 2);
  CHECK(same(kernels::symmetrize_pair(sym, 1, 2), sym));
  const Tensor skew = kernels::skew_symmetrize(random_tensor(rng, 3, 3), {1, 2});
  CHECK(kernels::symmetrize_pair(skew, 1, 2).is_zero());

  const Tensor t = from_sparse(2, 2, {{{0, 1}, "1"}});
  const Tensor expected = from_sparse(2, 2, {{{0, 1}, "1/2"}, {{1, 0}, "1/2"}});
  CHECK(same(kernels::symmetrize_pair(t, 0, 1), expected));
}

TEST_CASE("nabla: worked examples", "[kernels]") {
  const Tensor c = from_sparse(3, 2, {{{0, 1}, "5"}, {{2, 2}, "-1/3"}});
  CHECK(kernels::nabla(c).is_zero());
  CHECK(kernels::nabla(c).rank() == 3);

  const Tensor f = Tensor::scalar(parse_field("(* x0 x1)", 2));
  const Tensor grad = from_sparse(2, 1, {{{0}, "x1"}, {{1}, "x0"}});
  CHECK(same(kernels::nabla(f), grad));

  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor g = Tensor::scalar(ScalarField(random_polynomial(rng, 4)));
    const Tensor hess = kernels::nabla(kernels::nabla(g));
    CHECK(same(kernels::symmetrize_pair(hess, 0, 1), hess));
  }
}

TEST_CASE("skew_symmetrize is idempotent on any slot subset", "[kernels]") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const Tensor t = random_tensor(rng, dim, 4);
    const std::vector<std::size_t> slots = trial % 2 ? std::vector<std::size_t>{0, 2, 3}
                                                     : std::vector<std::size_t>{1, 3};
    const Tensor once = kernels::skew_symmetrize(t, slots);
    CHECK(same(kernels::skew_symmetrize(once, slots), once));
  }
}

TEST_CASE("parallel kernels agree with the serial reference", "[kernels][reference]") {
  Rng rng(6);
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (std::size_t rank = 0; rank <= 4; ++rank) {
      const Tensor t = random_tensor(rng, dim, rank);
      INFO("dim " << dim << " rank " << rank);
      CHECK(same(kernels::nabla(t), reference::nabla(t)));
      for (std::size_t k = 0; k <= rank; ++k) {
        const auto lead = iota(k);
        CHECK(same(kernels::skew_symmetrize(t, lead), reference::skew_symmetrize(t, lead)));
        CHECK(same(kernels::skew_symmetrize_leading(t, k), reference::skew_symmetrize(t, lead)));
      }
      if (rank >= 3) {
        const std::vector<std::size_t> scattered{2, 0};
        CHECK(same(kernels::skew_symmetrize(t, scattered),
                   reference::skew_symmetrize(t, scattered)));
      }
      if (rank >= 2) {
        CHECK(same(kernels::symmetrize_pair(t, 0, rank - 1),
                   reference::symmetrize_pair(t, 0, rank - 1)));
        std::vector<std::size_t> rotate(rank);
        for (std::size_t k = 0; k < rank; ++k) rotate[k] = (k + 1) % rank;
        CHECK(same(kernels::permute_slots(t, rotate), reference::permute_slots(t, rotate)));
      }
      std::vector<Point> points;
      for (int s = 0; s < 5; ++s) {
        Point p;
        for (std::size_t i = 0; i < dim; ++i) p.coords.emplace_back(rng.uniform(-5, 5));
        points.push_back(std::move(p));
      }
      const auto fast = kernels::evaluate(t, points);
      const auto slow = reference::evaluate(t, points);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        for (std::size_t j = 0; j < fast[i].size(); ++j) {
          CHECK(fast[i][j].exact() == slow[i][j].exact());
        }
      }
    }
  }
}

TEST_CASE("kernels agree with the reference on expression tensors", "[kernels][reference]") {
  const Tensor t =
      from_sparse(3, 3, {{{0, 1, 2}, "(/ 1 (+ 1 (^ x0 2)))"}, {{2, 1, 0}, "(sqrt (+ 4 x1))"},
                         {{1, 1, 0}, "(log (+ 2 (^ x2 2)))"}});
  REQUIRE_FALSE(t.is_polynomial());
  const EqualityPolicy policy;
  CHECK(compare(kernels::skew_symmetrize(t, {0, 1, 2}), reference::skew_symmetrize(t, iota(3)),
                policy)
            .equal);
  CHECK(compare(kernels::nabla(t), reference::nabla(t), policy).equal);
}

TEST_CASE("evaluate propagates singular points", "[kernels]") {
  const Tensor t = from_sparse(1, 1, {{{0}, "(/ 1 x0)"}});
  std::vector<Point> points{Point{{Rational(1)}}, Point{{Rational(0)}}};
  CHECK_THROWS_AS(kernels::evaluate(t, points), SingularPoint);
}
