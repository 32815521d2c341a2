#include "cochain/poincare.hpp"

#include <map>

#include "cochain/kernels.hpp"

namespace cochain {

namespace {

void require_polynomial(const Tensor& t, const char* op) {
  if (!t.is_polynomial()) throw NonPolynomial(std::string(op) + " needs polynomial entries");
}

MultiIndex first_nonzero(const Tensor& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.at(i).is_zero()) return t.unflatten(i);
  }
  return {};
}

}  // namespace

Tensor exterior_derivative(const Tensor& omega, std::size_t form_slots) {
  if (form_slots > omega.rank()) throw RankMismatch("more form slots than the rank");
  return kernels::skew_symmetrize_leading(kernels::nabla(omega), form_slots + 1);
}

Tensor homotopy(const Tensor& omega, std::size_t form_slots) {
  require_polynomial(omega, "homotopy");
  if (form_slots < 1 || form_slots > omega.rank()) {
    throw RankMismatch("homotopy needs 1 <= form slots <= rank");
  }
  const std::size_t d = omega.dim();
  const std::size_t p = form_slots;
  const unsigned k = static_cast<unsigned>(p - 1);
  const std::size_t out_rank = omega.rank() - 1;
  std::size_t out_size = 1;
  for (std::size_t i = 0; i < out_rank; ++i) out_size *= d;

  std::vector<ScalarField> out(out_size, ScalarField(d));
  // out_size entries are independent; omega.at is read-only.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t off = 0; off < out_size; ++off) {
    Polynomial acc(d);
    for (std::size_t a = 0; a < d; ++a) {
      const Polynomial& w = omega.at(a * out_size + off).polynomial();
      if (w.is_zero()) continue;
      acc += Polynomial::coordinate(d, a) * homotopy_scale_integral(w, k);
    }
    acc *= Rational(static_cast<long>(p));
    out[off] = ScalarField(std::move(acc));
  }
  return Tensor(d, out_rank, std::move(out));
}

Tensor de_rham_homotopy(const Tensor& omega, std::size_t form_slots) {
  require_polynomial(omega, "de_rham_homotopy");
  Tensor d = exterior_derivative(omega, form_slots);
  if (!d.is_zero()) {
    MultiIndex w = first_nonzero(d);
    const std::string what = "form is not closed; d(omega) nonzero at " + to_string(w);
    throw NotClosed(what, std::move(d), std::move(w));
  }
  return homotopy(omega, form_slots);
}

PotentialResult solve_potential(const CochainElement& t) {
  if (t.space().family != Space::Family::kK) throw InvalidMember("solve_potential expects K");
  const std::size_t q = t.grade();
  if (q == 0) throw BadParameter("K(0) has no predecessor in the complex");
  require_polynomial(t.tensor(), "solve_potential");

  const CochainElement dt = d_K(t);
  if (!dt.tensor().is_zero()) {
    MultiIndex w = first_nonzero(dt.tensor());
    const std::string what = "input is not a cocycle; d_K T nonzero at " + to_string(w);
    throw NotClosed(what, dt.tensor(), std::move(w));
  }

  Tensor potential;
  Tensor correction(t.dim(), 0);
  if (q == 1) {
    // f_lambda with d_mu f_lambda = T_{mu lambda}, then f with d_mu f = f_mu.
    const Tensor f_lambda = de_rham_homotopy(t.tensor(), 1);
    potential = de_rham_homotopy(f_lambda, 1);
  } else {
    const Tensor a = de_rham_homotopy(t.tensor(), q);
    const Tensor skew_a = kernels::skew_symmetrize_leading(a, a.rank());
    correction = de_rham_homotopy(skew_a, q);
    potential = a - d_nabla(correction);
  }

  CochainElement result = CochainElement::make(std::move(potential), Space::K(q - 1));
  const Tensor diff = d_K(result).tensor() - t.tensor();
  double residual = 0.0;
  for (const auto& e : diff.entries()) {
    residual = std::max(residual, e.polynomial().max_abs_coefficient());
  }
  return {std::move(result), std::move(correction), residual};
}

std::size_t coefficient_rank(std::span<const ScalarField> fields) {
  std::map<Exponents, std::size_t> columns;
  for (const auto& f : fields) {
    for (const auto& term : f.polynomial().terms()) columns.emplace(term.exps, columns.size());
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) {
    std::vector<Rational> row(columns.size(), Rational(0));
    for (const auto& term : f.polynomial().terms()) row[columns.at(term.exps)] = term.coeff;
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over Q.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < columns.size(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<ScalarField> affine_kernel_basis(std::size_t d) {
  if (d == 0) throw BadParameter("dimension must be at least 1");
  std::vector<ScalarField> basis{ScalarField::constant(d, Rational(1))};
  for (std::size_t a = 0; a < d; ++a) basis.push_back(ScalarField::coordinate(d, a));
  for (const auto& b : basis) {
    if (!d_K(CochainElement::make(Tensor::scalar(b), Space::K(0))).tensor().is_zero()) {
      throw IdentityViolation("affine basis element has a nonzero Hessian");
    }
  }
  if (coefficient_rank(basis) != d + 1) {
    throw IdentityViolation("affine basis is linearly dependent");
  }
  return basis;
}

}  // namespace cochain
