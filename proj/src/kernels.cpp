#include "cochain/kernels.hpp"

#include <exception>
#include <mutex>

#include "cochain/errors.hpp"
#include "cochain/permutation.hpp"

namespace cochain::kernels {

namespace {

// Exceptions may not leave an OpenMP region; keep the first one and
// rethrow it on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

void check_positions(const Tensor& t, std::span<const std::size_t> positions) {
  std::vector<bool> seen(t.rank(), false);
  for (auto p : positions) {
    if (p >= t.rank()) throw BadParameter("slot position out of range");
    if (seen[p]) throw BadParameter("slot positions must be distinct");
    seen[p] = true;
  }
}

Rational inverse_factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return 1 / f;
}

}  // namespace

Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions) {
  check_positions(t, positions);
  const std::size_t k = positions.size();
  if (k <= 1) return t;
  std::vector<ScalarField> out(t.size(), ScalarField(t.dim()));
  if (k > t.dim()) return Tensor(t.dim(), t.rank(), std::move(out));

  const auto perms = all_permutations(k);
  const Rational scale = inverse_factorial(k);

  // Orbit representatives: slot values strictly increasing.
  parallel_for(t.size(), [&](std::size_t off) {
    MultiIndex idx = t.unflatten(off);
    for (std::size_t j = 1; j < k; ++j) {
      if (idx[positions[j - 1]] >= idx[positions[j]]) return;
    }
    std::vector<std::size_t> vals(k);
    for (std::size_t j = 0; j < k; ++j) vals[j] = idx[positions[j]];
    ScalarField acc(t.dim());
    for (const auto& p : perms) {
      for (std::size_t j = 0; j < k; ++j) idx[positions[j]] = vals[p.map[j]];
      if (p.sign > 0) {
        acc += t.at(idx);
      } else {
        acc -= t.at(idx);
      }
    }
    out[off] = acc * scale;
  });

  // Everything else is a signed copy of its representative.
  parallel_for(t.size(), [&](std::size_t off) {
    MultiIndex idx = t.unflatten(off);
    std::vector<std::size_t> vals(k);
    for (std::size_t j = 0; j < k; ++j) vals[j] = idx[positions[j]];
    const int sign = sorting_sign(vals);
    if (sign == 0) return;
    for (std::size_t j = 0; j < k; ++j) idx[positions[j]] = vals[j];
    const std::size_t rep = t.offset(idx);
    if (rep == off) return;
    out[off] = sign > 0 ? out[rep] : -out[rep];
  });
  return Tensor(t.dim(), t.rank(), std::move(out));
}

Tensor skew_symmetrize(const Tensor& t, std::initializer_list<std::size_t> positions) {
  return skew_symmetrize(t, std::span<const std::size_t>(positions.begin(), positions.size()));
}

Tensor skew_symmetrize_leading(const Tensor& t, std::size_t count) {
  std::vector<std::size_t> positions(count);
  for (std::size_t i = 0; i < count; ++i) positions[i] = i;
  return skew_symmetrize(t, positions);
}

Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b) {
  if (a >= t.rank() || b >= t.rank() || a == b) {
    throw BadParameter("symmetrize_pair needs two distinct slots within rank");
  }
  const Rational half(1, 2);
  std::vector<ScalarField> out(t.size(), ScalarField(t.dim()));
  parallel_for(t.size(), [&](std::size_t off) {
    MultiIndex idx = t.unflatten(off);
    std::swap(idx[a], idx[b]);
    out[off] = (t.at(off) + t.at(idx)) * half;
  });
  return Tensor(t.dim(), t.rank(), std::move(out));
}

Tensor nabla(const Tensor& t) {
  const std::size_t inner = t.size();
  std::vector<ScalarField> out(inner * t.dim(), ScalarField(t.dim()));
  parallel_for(out.size(), [&](std::size_t off) {
    out[off] = t.at(off % inner).differentiate(off / inner);
  });
  return Tensor(t.dim(), t.rank() + 1, std::move(out));
}

Tensor permute_slots(const Tensor& t, std::span<const std::size_t> p) {
  if (p.size() != t.rank()) throw RankMismatch("slot permutation has the wrong length");
  check_positions(t, p);
  std::vector<ScalarField> out(t.size(), ScalarField(t.dim()));
  parallel_for(t.size(), [&](std::size_t off) {
    const MultiIndex idx = t.unflatten(off);
    MultiIndex src(t.rank());
    for (std::size_t k = 0; k < t.rank(); ++k) src[k] = idx[p[k]];
    out[off] = t.at(src);
  });
  return Tensor(t.dim(), t.rank(), std::move(out));
}

std::vector<std::vector<Value>> evaluate(const Tensor& t, std::span<const Point> points) {
  std::vector<std::vector<Value>> values(points.size());
  parallel_for(points.size(), [&](std::size_t n) {
    std::vector<Value> row(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) row[i] = t.at(i).evaluate(points[n]);
    values[n] = std::move(row);
  });
  return values;
}

}  // namespace cochain::kernels
