#pragma once

#include <initializer_list>
#include <utility>

#include "cochain/sexpr.hpp"
#include "cochain/tensor.hpp"

namespace cochain::test {

inline bool same(const Tensor& a, const Tensor& b) {
  return a.dim() == b.dim() && a.rank() == b.rank() && (a - b).is_zero();
}

// Zero tensor with a few entries given as s-expressions.
inline Tensor from_sparse(std::size_t dim, std::size_t rank,
                          std::initializer_list<std::pair<MultiIndex, const char*>> entries) {
  Tensor t(dim, rank);
  for (const auto& [index, text] : entries) t.set(index, parse_field(text, dim));
  return t;
}

inline Point point(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.coords.emplace_back(x);
  return p;
}

}  // namespace cochain::test
