#pragma once

#include "rat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace armred {

// Sparse rational matrix; absent entries are zero. Compiled instances are
// overwhelmingly zero, so a coordinate map is the right default; small blocks
// are densified inside the elimination routines.
class RatMatrix {
public:
  using Index = std::pair<uint32_t, uint32_t>;

  RatMatrix() = default;
  RatMatrix(uint32_t rows, uint32_t cols) : rows_(rows), cols_(cols) {}

  static RatMatrix identity(uint32_t n);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  const Rat& at(uint32_t i, uint32_t j) const;
  void set(uint32_t i, uint32_t j, Rat value);

  const std::map<Index, Rat>& entries() const { return entries_; }

  bool operator==(const RatMatrix&) const = default;

private:
  void check_index(uint32_t i, uint32_t j) const;

  uint32_t rows_ = 0;
  uint32_t cols_ = 0;
  std::map<Index, Rat> entries_;
};

// Invokes fn(perm, sign) for every permutation of {0,...,n-1}; sign is the
// permutation parity (+1/-1).
template <typename Fn>
void for_each_permutation(uint32_t n, Fn&& fn) {
  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    int inversions = 0;
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    fn(perm, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Determinant of an exactly 4x4 matrix by the signed-permutation sum.
Rat det4_leibniz(const RatMatrix& m);

// Exact determinant of any square matrix via fraction-free (Bareiss)
// elimination: rows are scaled to integers, the final pivot is the scaled
// determinant up to the swap sign.
Rat det_bareiss(const RatMatrix& m);

// Exact rank over the rationals via fraction-free elimination with column
// skipping on rank-deficient columns.
uint32_t exact_rank(const RatMatrix& m);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

RatMatrix submatrix(const RatMatrix& m, const std::vector<uint32_t>& rows,
                    const std::vector<uint32_t>& cols);

}  // namespace armred
