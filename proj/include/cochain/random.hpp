#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cochain/complex.hpp"
#include "cochain/polynomial.hpp"
#include "cochain/tensor.hpp"

namespace cochain {

// Seeded generator with platform-independent draws (no std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct RandomPolynomialOptions {
  unsigned max_degree = 3;
  std::size_t max_terms = 4;
  long coeff_bound = 3;  // coefficients in [-bound, bound] \ {0}
};

Polynomial random_polynomial(Rng& rng, std::size_t dim, const RandomPolynomialOptions& opts = {});
Tensor random_tensor(Rng& rng, std::size_t dim, std::size_t rank,
                     const RandomPolynomialOptions& opts = {});

// project_to_K of a random tensor (for q >= 2), symmetrized random tensor
// (q = 1), random polynomial (q = 0).
CochainElement random_k_member(Rng& rng, std::size_t dim, std::size_t q,
                               const RandomPolynomialOptions& opts = {});
// phi of a random K member; phi is a bijection K(q) -> G(q).
CochainElement random_g_member(Rng& rng, std::size_t dim, std::size_t q,
                               const RandomPolynomialOptions& opts = {});

}  // namespace cochain
