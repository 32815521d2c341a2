#include "cochain/complex.hpp"

#include <numeric>

#include "cochain/errors.hpp"
#include "cochain/kernels.hpp"

namespace cochain {

struct CochainAccess {
  static CochainElement trusted(Tensor t, Space space) {
    return CochainElement(std::move(t), space);
  }
};

namespace {

Tensor swap_slots(const Tensor& t, std::size_t a, std::size_t b) {
  std::vector<std::size_t> p(t.rank());
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return kernels::permute_slots(t, p);
}

Tensor full_skew(const Tensor& t) { return kernels::skew_symmetrize_leading(t, t.rank()); }

// Records the first failing condition; later conditions only update the
// worst residual.
void require_equal(const char* condition, const Tensor& lhs, const Tensor& rhs,
                   const EqualityPolicy& policy, MembershipReport& report) {
  const TensorComparison c = compare(lhs, rhs, policy);
  if (!c.equal && report.member) {
    report.member = false;
    report.failed_condition = condition;
    report.witness_index = c.witness_index;
    report.witness_point = c.witness_point;
  }
  report.worst_residual = std::max(report.worst_residual, c.worst_residual);
}

Tensor cyclic_sum(const Tensor& t, std::size_t q) {
  Tensor acc(t.dim(), t.rank());
  for (std::size_t i = 0; i <= q; ++i) {
    const CyclicPermutation tau(q, i);
    std::vector<std::size_t> p(q + 1);
    for (std::size_t k = 0; k <= q; ++k) p[k] = tau(k);
    const Tensor term = kernels::permute_slots(t, p);
    acc = ((i * q) % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::string Space::to_string() const {
  return std::string(family == Family::kK ? "K" : "G") + "(" + std::to_string(grade) + ")";
}

MembershipReport check_membership(const Tensor& t, Space space, const EqualityPolicy& policy) {
  if (t.rank() != space.rank()) {
    throw RankMismatch(space.to_string() + " needs rank " + std::to_string(space.rank()) +
                       ", got " + std::to_string(t.rank()));
  }
  MembershipReport report;
  const std::size_t q = space.grade;
  if (q == 0) return report;
  if (q == 1) {
    require_equal("symmetric", t, swap_slots(t, 0, 1), policy, report);
    return report;
  }
  const Tensor zero(t.dim(), t.rank());
  if (space.family == Space::Family::kK) {
    require_equal("skew in leading slots", t, kernels::skew_symmetrize_leading(t, q), policy,
                  report);
    require_equal("total skew part vanishes", full_skew(t), zero, policy, report);
  } else {
    if (q >= 3) {
      require_equal("skew in leading slots", t, kernels::skew_symmetrize_leading(t, q - 1),
                    policy, report);
    }
    require_equal("symmetric in last two slots", t, swap_slots(t, q - 1, q), policy, report);
    require_equal("cyclic sum vanishes", cyclic_sum(t, q), zero, policy, report);
  }
  return report;
}

bool is_member(const Tensor& t, Space space, const EqualityPolicy& policy) {
  return check_membership(t, space, policy).member;
}

CochainElement CochainElement::make(Tensor t, Space space, const EqualityPolicy& policy) {
  const MembershipReport r = check_membership(t, space, policy);
  if (!r.member) {
    std::string what = "not in " + space.to_string() + ": " + r.failed_condition +
                       " fails at " + to_string(r.witness_index);
    if (!r.witness_point.empty()) what += " x=" + r.witness_point.front().to_string();
    throw InvalidMember(what);
  }
  return CochainElement(std::move(t), space);
}

Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions) {
  return kernels::skew_symmetrize(t, positions);
}

Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b) {
  return kernels::symmetrize_pair(t, a, b);
}

Tensor nabla(const Tensor& t) { return kernels::nabla(t); }

Tensor d_nabla(const Tensor& t) {
  if (t.rank() < 1) throw RankMismatch("d_nabla needs rank >= 1");
  return kernels::skew_symmetrize_leading(kernels::nabla(t), t.rank());
}

CochainElement project_to_K(const Tensor& t, std::size_t q) {
  const Space space = Space::K(q);
  if (t.rank() != space.rank()) {
    throw RankMismatch("project_to_K(" + std::to_string(q) + ") needs rank " +
                       std::to_string(space.rank()));
  }
  if (q == 0) return CochainAccess::trusted(t, space);
  if (q == 1) return CochainAccess::trusted(kernels::symmetrize_pair(t, 0, 1), space);
  const Tensor v = kernels::skew_symmetrize_leading(t, q);
  return CochainAccess::trusted(v - full_skew(v), space);
}

CochainElement d_K(const CochainElement& e) {
  if (e.space().family != Space::Family::kK) throw InvalidMember("d_K expects a K element");
  const Space next = Space::K(e.grade() + 1);
  if (e.grade() == 0) {
    return CochainAccess::trusted(kernels::nabla(kernels::nabla(e.tensor())), next);
  }
  return CochainAccess::trusted(d_nabla(e.tensor()), next);
}

CochainElement phi(const CochainElement& e) {
  if (e.space().family != Space::Family::kK) throw InvalidMember("phi expects a K element");
  const std::size_t q = e.grade();
  if (q <= 1) return CochainAccess::trusted(e.tensor(), Space::G(q));
  return CochainAccess::trusted(kernels::symmetrize_pair(e.tensor(), q - 1, q), Space::G(q));
}

CochainElement psi(const CochainElement& e) {
  if (e.space().family != Space::Family::kG) throw InvalidMember("psi expects a G element");
  const std::size_t q = e.grade();
  if (q <= 1) return CochainAccess::trusted(e.tensor(), Space::K(q));
  const Rational factor = make_rational(static_cast<long>(2 * q), static_cast<long>(q + 1));
  return CochainAccess::trusted(factor * kernels::skew_symmetrize_leading(e.tensor(), q),
                                Space::K(q));
}

CochainElement d_G(const CochainElement& e) { return phi(d_K(psi(e))); }

CochainElement d_G1_explicit(const CochainElement& s) {
  if (s.space() != Space::G(1) && s.space() != Space::K(1)) {
    throw InvalidMember("explicit d_G formula applies to G(1) only");
  }
  const Tensor& t = s.tensor();
  const std::size_t d = t.dim();
  const Rational half(1, 2), quarter(1, 4);
  Tensor out(d, 3);
  for (std::size_t mu = 0; mu < d; ++mu) {
    for (std::size_t nu = 0; nu < d; ++nu) {
      for (std::size_t la = 0; la < d; ++la) {
        ScalarField v = half * t.at({nu, la}).differentiate(mu) -
                        quarter * (t.at({mu, la}).differentiate(nu) +
                                   t.at({mu, nu}).differentiate(la));
        out.set({mu, nu, la}, std::move(v));
      }
    }
  }
  return CochainAccess::trusted(std::move(out), Space::G(2));
}

Tensor g_decomposition_residual(const CochainElement& s) {
  if (s.space().family != Space::Family::kG || s.grade() < 2) {
    throw BadParameter("decomposition identity needs a G element of grade >= 2");
  }
  const std::size_t n = s.grade() - 1;
  const Tensor& t = s.tensor();
  const Tensor a = kernels::skew_symmetrize_leading(t, n + 1);
  const Rational factor = make_rational(static_cast<long>(n + 1), static_cast<long>(n + 2));
  return t - factor * (a + swap_slots(a, n, n + 1));
}

}  // namespace cochain
