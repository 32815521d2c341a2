#include "cochain/random.hpp"

namespace cochain {

Polynomial random_polynomial(Rng& rng, std::size_t dim, const RandomPolynomialOptions& opts) {
  const auto terms = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(opts.max_terms)));
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    Term t;
    const unsigned degree = static_cast<unsigned>(rng.uniform(0, opts.max_degree));
    for (unsigned k = 0; k < degree; ++k) t.exps[rng.uniform(0, static_cast<long>(dim) - 1)] += 1;
    long c = rng.uniform(-opts.coeff_bound, opts.coeff_bound - 1);
    if (c >= 0) ++c;
    t.coeff = Rational(c);
    out.push_back(std::move(t));
  }
  return Polynomial::from_terms(dim, std::move(out));
}

Tensor random_tensor(Rng& rng, std::size_t dim, std::size_t rank,
                     const RandomPolynomialOptions& opts) {
  Tensor shape(dim, rank);
  std::vector<ScalarField> entries;
  entries.reserve(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    entries.emplace_back(random_polynomial(rng, dim, opts));
  }
  return Tensor(dim, rank, std::move(entries));
}

CochainElement random_k_member(Rng& rng, std::size_t dim, std::size_t q,
                               const RandomPolynomialOptions& opts) {
  return project_to_K(random_tensor(rng, dim, Space::K(q).rank(), opts), q);
}

CochainElement random_g_member(Rng& rng, std::size_t dim, std::size_t q,
                               const RandomPolynomialOptions& opts) {
  return phi(random_k_member(rng, dim, q, opts));
}

}  // namespace cochain
