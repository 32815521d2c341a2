#include "cochain/tensor.hpp"

#include "cochain/errors.hpp"

namespace cochain {

std::string to_string(const MultiIndex& index) {
  std::string out = "[";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(index[i]);
  }
  return out + "]";
}

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t rank)
    : dim_(dim), rank_(rank), entries_(power(dim, rank), ScalarField(dim)) {}

Tensor::Tensor(std::size_t dim, std::size_t rank, std::vector<ScalarField> entries)
    : dim_(dim), rank_(rank), entries_(std::move(entries)) {
  if (entries_.size() != power(dim, rank)) {
    throw RankMismatch("tensor needs " + std::to_string(power(dim, rank)) + " entries, got " +
                       std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (e.dim() != dim) throw BadParameter("tensor entry has the wrong dimension");
  }
  normalize_backend();
}

Tensor Tensor::scalar(const ScalarField& f) { return Tensor(f.dim(), 0, {f}); }

void Tensor::normalize_backend() {
  polynomial_ = true;
  for (const auto& e : entries_) polynomial_ = polynomial_ && e.is_polynomial();
  if (polynomial_) return;
  for (auto& e : entries_) {
    if (e.is_polynomial()) e = ScalarField(dim_, e.to_expr());
  }
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != rank_) throw RankMismatch("index length does not match tensor rank");
  std::size_t off = 0;
  for (auto i : index) {
    if (i >= dim_) throw BadParameter("tensor index out of range");
    off = off * dim_ + i;
  }
  return off;
}

MultiIndex Tensor::unflatten(std::size_t offset) const {
  MultiIndex index(rank_);
  for (std::size_t k = rank_; k-- > 0;) {
    index[k] = offset % dim_;
    offset /= dim_;
  }
  return index;
}

const ScalarField& Tensor::at(std::span<const std::size_t> index) const {
  return entries_[offset(index)];
}

void Tensor::set(std::span<const std::size_t> index, ScalarField f) {
  if (f.dim() != dim_) throw BadParameter("tensor entry has the wrong dimension");
  const bool promote = polynomial_ && !f.is_polynomial();
  entries_[offset(index)] = std::move(f);
  if (promote || !polynomial_) normalize_backend();
}

bool Tensor::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Tensor Tensor::operator-() const {
  std::vector<ScalarField> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(-e);
  return Tensor(dim_, rank_, std::move(out));
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.rank_ != b.rank_) throw RankMismatch("tensor shape mismatch");
  std::vector<ScalarField> out = a.entries_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
  return Tensor(a.dim_, a.rank_, std::move(out));
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.rank_ != b.rank_) throw RankMismatch("tensor shape mismatch");
  std::vector<ScalarField> out = a.entries_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries_[i];
  return Tensor(a.dim_, a.rank_, std::move(out));
}

Tensor operator*(const Rational& k, const Tensor& t) {
  std::vector<ScalarField> out = t.entries_;
  for (auto& e : out) e *= k;
  return Tensor(t.dim_, t.rank_, std::move(out));
}

TensorComparison compare(const Tensor& a, const Tensor& b, const EqualityPolicy& policy) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) throw RankMismatch("tensor shape mismatch");
  TensorComparison result;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const FieldComparison c = compare(a.at(i), b.at(i), policy);
    if (!c.equal) result.equal = false;
    const bool worse = c.worst_residual > result.worst_residual;
    if (worse || (!c.equal && result.witness_index.empty())) {
      result.worst_residual = std::max(result.worst_residual, c.worst_residual);
      result.witness_index = a.unflatten(i);
      result.witness_point = c.witness;
    }
  }
  return result;
}

}  // namespace cochain
