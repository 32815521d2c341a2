#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cochain/field.hpp"

namespace cochain {

using MultiIndex = std::vector<std::size_t>;

std::string to_string(const MultiIndex& index);

// Dense covariant tensor of rank r over R^d: d^r scalar fields stored in
// row-major order (last index fastest).
//
// Entries share one backend: if any entry is an expression, all of them are
// promoted to expressions on construction.
class Tensor {
 public:
  Tensor() : Tensor(0, 0) {}
  Tensor(std::size_t dim, std::size_t rank);  // zero tensor
  Tensor(std::size_t dim, std::size_t rank, std::vector<ScalarField> entries);

  static Tensor scalar(const ScalarField& f);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return entries_.size(); }
  bool is_polynomial() const { return polynomial_; }

  const std::vector<ScalarField>& entries() const { return entries_; }
  const ScalarField& at(std::size_t offset) const { return entries_[offset]; }
  const ScalarField& at(std::span<const std::size_t> index) const;
  const ScalarField& at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  // Rank-0 tensors hold exactly one entry.
  const ScalarField& value() const { return entries_.front(); }

  // Builders stay on the same backend rule as the constructor.
  void set(std::span<const std::size_t> index, ScalarField f);
  void set(std::initializer_list<std::size_t> index, ScalarField f) {
    set(std::span<const std::size_t>(index.begin(), index.size()), std::move(f));
  }

  std::size_t offset(std::span<const std::size_t> index) const;
  MultiIndex unflatten(std::size_t offset) const;

  bool is_zero() const;

  Tensor operator-() const;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Rational& k, const Tensor& t);

 private:
  void normalize_backend();

  std::size_t dim_;
  std::size_t rank_;
  std::vector<ScalarField> entries_;
  bool polynomial_ = true;
};

struct TensorComparison {
  bool equal = true;
  double worst_residual = 0.0;
  MultiIndex witness_index;
  std::vector<Point> witness_point;  // empty for exact comparisons
};

// Entrywise compare() from field.hpp; reports the worst entry.
TensorComparison compare(const Tensor& a, const Tensor& b, const EqualityPolicy& policy);

}  // namespace cochain
