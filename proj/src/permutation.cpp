#include "cochain/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace cochain {

std::vector<SignedPermutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    // Sign from the inversion count; n stays small.
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (p[i] > p[j]) ++inversions;
      }
    }
    out.push_back({p, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int sorting_sign(std::vector<std::size_t>& values) {
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < values.size(); ++i) {
    for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
      if (values[j - 1] == values[j]) return 0;
      std::swap(values[j - 1], values[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] == values[i]) return 0;
  }
  return sign;
}

}  // namespace cochain
