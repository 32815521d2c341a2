#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cochain/field.hpp"
#include "cochain/tensor.hpp"

// Serial, unoptimized versions of the kernels in kernels.hpp: every output
// entry is computed straight from its defining formula.
namespace cochain::reference {

Tensor skew_symmetrize(const Tensor& t, std::span<const std::size_t> positions);
Tensor symmetrize_pair(const Tensor& t, std::size_t a, std::size_t b);
Tensor nabla(const Tensor& t);
Tensor permute_slots(const Tensor& t, std::span<const std::size_t> p);
std::vector<std::vector<Value>> evaluate(const Tensor& t, std::span<const Point> points);

}  // namespace cochain::reference
