#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cochain/field.hpp"
#include "cochain/tensor.hpp"

// OpenMP-parallel tensor kernels. Every kernel has a plain serial
// counterpart in reference.hpp computing the same thing the direct way; the
// tests hold the two against each other.
namespace cochain::kernels {

// Alternating sum over permutations of the slots in `positions`, divided by
// (#positions)!. Only one entry per orbit of sorted slot values is summed;
// the other entries are copied with the permutation sign, and entries with
// a repeated value in the chosen slots are zero.
Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions);
Tensor skew_symmetrize(const Tensor& t, std::initializer_list<std::size_t> positions);
Tensor skew_symmetrize_leading(const Tensor& t, std::size_t count);

// (T + T with slots a, b swapped) / 2
Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b);

// out[a, rest...] = d/dx^a t[rest...]
Tensor nabla(const Tensor& t);

// out[i_0, ..., i_{r-1}] = t[i_{p(0)}, ..., i_{p(r-1)}]
Tensor permute_slots(const Tensor& t, std::span<const std::size_t> p);

// values[point][entry]
std::vector<std::vector<Value>> evaluate(const Tensor& t, std::span<const Point> points);

}  // namespace cochain::kernels
