#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cochain/field.hpp"
#include "cochain/permutation.hpp"
#include "cochain/tensor.hpp"

namespace cochain {

// K(q) or G(q). Grade q lives on rank-(q+1) tensors for q >= 1 and on
// scalars for q = 0; K(0) = G(0) and K(1) = G(1).
struct Space {
  enum class Family { kK, kG };
  Family family = Family::kK;
  std::size_t grade = 0;

  static Space K(std::size_t q) { return {Family::kK, q}; }
  static Space G(std::size_t q) { return {Family::kG, q}; }
  std::size_t rank() const { return grade == 0 ? 0 : grade + 1; }
  std::string to_string() const;
  friend bool operator==(const Space&, const Space&) = default;
};

struct MembershipReport {
  bool member = true;
  std::string failed_condition;  // empty when member
  double worst_residual = 0.0;
  MultiIndex witness_index;
  std::vector<Point> witness_point;
};

// Checks every defining condition of `space`:
//   K(1), G(1): symmetric.
//   K(q), q >= 2: skew in the first q slots, total skew part zero.
//   G(q), q >= 2: skew in the first q-1 slots, symmetric in the last two,
//     sum_i (-1)^(i q) S[tau^i applied to the slots] = 0.
// Exact on polynomial tensors; sampled with `policy` otherwise.
// Throws RankMismatch if the rank does not fit the grade.
MembershipReport check_membership(const Tensor& t, Space space,
                                  const EqualityPolicy& policy = {});
bool is_member(const Tensor& t, Space space, const EqualityPolicy& policy = {});

// A tensor known to lie in K(q) or G(q). Only make() and the complex
// operations below produce one.
class CochainElement {
 public:
  // Validates; throws InvalidMember with the failing condition and witness.
  static CochainElement make(Tensor t, Space space, const EqualityPolicy& policy = {});

  const Tensor& tensor() const { return tensor_; }
  Space space() const { return space_; }
  std::size_t grade() const { return space_.grade; }
  std::size_t dim() const { return tensor_.dim(); }

 private:
  friend struct CochainAccess;
  CochainElement(Tensor t, Space space) : tensor_(std::move(t)), space_(space) {}
  Tensor tensor_;
  Space space_;
};

// Plain slot operations, re-exported for readability at call sites.
Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions);
Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b);
Tensor nabla(const Tensor& t);

// Treats a rank-(n+1) tensor as an n-form with one trailing symmetric slot:
// prepend the derivative index, then skew the first n+1 slots of the result.
Tensor d_nabla(const Tensor& t);

// Projects an arbitrary rank-(q+1) tensor into K(q): skew the first q slots,
// then remove the total skew part. q = 1 symmetrizes, q = 0 is the identity.
CochainElement project_to_K(const Tensor& t, std::size_t q);

// K(0) -> K(1) is the Hessian; K(q) -> K(q+1) is d_nabla for q >= 1.
CochainElement d_K(const CochainElement& e);

// K(q) -> G(q): symmetrize the last two slots (identity for q <= 1).
CochainElement phi(const CochainElement& e);
// G(q) -> K(q): 2q/(q+1) times the skew part over the first q slots
// (identity for q <= 1).
CochainElement psi(const CochainElement& e);

// phi o d_K o psi
CochainElement d_G(const CochainElement& e);

// On G(1): 1/2 d_mu S_{nu lambda} - 1/4 (d_nu S_{mu lambda} + d_lambda S_{mu nu}).
CochainElement d_G1_explicit(const CochainElement& s);

// For S in G(n+1), n >= 1:
//   S - (n+1)/(n+2) (S_{[mu_1..mu_n nu] lambda} + S_{[mu_1..mu_n lambda] nu}),
// which vanishes identically on G.
Tensor g_decomposition_residual(const CochainElement& s);

}  // namespace cochain
