#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cochain/complex.hpp"
#include "cochain/errors.hpp"
#include "cochain/tensor.hpp"

namespace cochain {

// The input of a homotopy step was not closed. Carries d(omega).
class NotClosed : public IdentityViolation {
 public:
  NotClosed(const std::string& what, Tensor residual, MultiIndex witness)
      : IdentityViolation(what), residual_(std::move(residual)), witness_(std::move(witness)) {}
  const Tensor& residual() const { return residual_; }
  const MultiIndex& witness() const { return witness_; }

 private:
  Tensor residual_;
  MultiIndex witness_;
};

// A tensor whose first `form_slots` slots are skew is read as a family of
// p-forms indexed by the remaining (trailing) slots.
//
// d: prepend the derivative slot, skew the first p+1 slots. With the
// normalized skew used throughout, this is the usual exterior derivative
// divided by p+1.
Tensor exterior_derivative(const Tensor& omega, std::size_t form_slots);

// Ray homotopy matched to the normalized d above:
//   (h w)[m2..mp, rest](x) = p * sum_a x^a int_0^1 t^(p-1) w[a, m2..mp, rest](t x) dt
// so that d h + h d = id on p-forms, p >= 1. No closedness check.
Tensor homotopy(const Tensor& omega, std::size_t form_slots);

// homotopy() restricted to closed input; throws NotClosed otherwise and
// NonPolynomial for expression tensors. Then d(h w) = w exactly.
Tensor de_rham_homotopy(const Tensor& omega, std::size_t form_slots);

struct PotentialResult {
  CochainElement potential;  // in K(q-1)
  Tensor correction_b;       // the (q-2)-form subtracted via d_nabla; zero tensor for q = 1
  double residual = 0.0;     // worst coefficient of d_K(potential) - input
};

// Preimage under d_K of a closed polynomial K(q) element, q >= 1.
//   q = 1: integrate twice, T = Hessian(f).
//   q >= 2: A = h(T) per trailing slot, B = h(total skew of A),
//           A' = A - d_nabla(B), so that A' lies in K(q-1) and d_K A' = T.
PotentialResult solve_potential(const CochainElement& t);

// {1, x0, ..., x_{d-1}}: a basis of ker d_K on K(0) over R^d. Verifies each
// element is annihilated and that the d+1 coefficient vectors are
// independent; throws IdentityViolation if not.
std::vector<ScalarField> affine_kernel_basis(std::size_t d);

// Rank over Q of the coefficient vectors of polynomial fields.
std::size_t coefficient_rank(std::span<const ScalarField> fields);

}  // namespace cochain
