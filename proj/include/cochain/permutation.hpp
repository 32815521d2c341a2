#pragma once

#include <cstddef>
#include <vector>

namespace cochain {

struct SignedPermutation {
  std::vector<std::size_t> map;  // map[i] = image of i
  int sign = 1;
};

// All n! permutations of {0..n-1} with their signs, in lexicographic order.
std::vector<SignedPermutation> all_permutations(std::size_t n);

// Sign of the permutation that sorts `values` ascending, 0 on repeats.
int sorting_sign(std::vector<std::size_t>& values);

// tau^power on n + 1 letters, tau = (1 2 ... n+1); positions are 0-based
// here, so image(k) = (k + power) mod (n + 1).
class CyclicPermutation {
 public:
  CyclicPermutation(std::size_t n, std::size_t power) : n_(n), power_(power % (n + 1)) {}
  std::size_t n() const { return n_; }
  std::size_t power() const { return power_; }
  std::size_t operator()(std::size_t k) const { return (k + power_) % (n_ + 1); }
  CyclicPermutation compose(const CyclicPermutation& o) const {
    return CyclicPermutation(n_, power_ + o.power_);
  }

 private:
  std::size_t n_;
  std::size_t power_;
};

}  // namespace cochain
