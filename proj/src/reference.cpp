#include "cochain/reference.hpp"

#include "cochain/errors.hpp"
#include "cochain/permutation.hpp"

namespace cochain::reference {

Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions) {
  const std::size_t k = positions.size();
  const auto perms = all_permutations(k);
  Rational factorial(1);
  for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<unsigned long>(i);
  std::vector<ScalarField> out;
  out.reserve(t.size());
  for (std::size_t off = 0; off < t.size(); ++off) {
    const MultiIndex idx = t.unflatten(off);
    ScalarField acc(t.dim());
    for (const auto& p : perms) {
      MultiIndex src = idx;
      for (std::size_t j = 0; j < k; ++j) src[positions[j]] = idx[positions[p.map[j]]];
      if (p.sign > 0) {
        acc += t.at(src);
      } else {
        acc -= t.at(src);
      }
    }
    out.push_back(acc * Rational(1 / factorial));
  }
  return Tensor(t.dim(), t.rank(), std::move(out));
}

Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b) {
  std::vector<ScalarField> out;
  out.reserve(t.size());
  for (std::size_t off = 0; off < t.size(); ++off) {
    MultiIndex idx = t.unflatten(off);
    std::swap(idx[a], idx[b]);
    out.push_back((t.at(off) + t.at(idx)) * Rational(1, 2));
  }
  return Tensor(t.dim(), t.rank(), std::move(out));
}

Tensor nabla(const Tensor& t) {
  Tensor out(t.dim(), t.rank() + 1);
  std::vector<ScalarField> entries;
  for (std::size_t off = 0; off < out.size(); ++off) {
    const MultiIndex idx = out.unflatten(off);
    const MultiIndex rest(idx.begin() + 1, idx.end());
    entries.push_back(t.at(rest).differentiate(idx[0]));
  }
  return Tensor(t.dim(), t.rank() + 1, std::move(entries));
}

Tensor permute_slots(const Tensor& t, std::span<const std::size_t> p) {
  std::vector<ScalarField> out;
  for (std::size_t off = 0; off < t.size(); ++off) {
    const MultiIndex idx = t.unflatten(off);
    MultiIndex src(t.rank());
    for (std::size_t k = 0; k < t.rank(); ++k) src[k] = idx[p[k]];
    out.push_back(t.at(src));
  }
  return Tensor(t.dim(), t.rank(), std::move(out));
}

std::vector<std::vector<Value>> evaluate(const Tensor& t, std::span<const Point> points) {
  std::vector<std::vector<Value>> values;
  for (const auto& p : points) {
    std::vector<Value> row;
    for (const auto& e : t.entries()) row.push_back(e.evaluate(p));
    values.push_back(std::move(row));
  }
  return values;
}

}  // namespace cochain::reference
