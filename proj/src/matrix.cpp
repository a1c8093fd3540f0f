#include "matrix.hpp"

#include "errors.hpp"

#include <algorithm>

namespace armred {

namespace {

const Rat kZero = 0;

Int checked_div(const Int& value, const Int& divisor) {
  Int quotient, remainder;
  divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0) fail(errc::internal, "fraction-free elimination produced a non-exact division");
  return quotient;
}

// Densify and clear denominators row by row. Row scaling preserves rank, and
// the product of the scales is divided back out of determinants.
std::vector<std::vector<Int>> scale_rows_to_int(const RatMatrix& m, Int& scale_product) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols(), 0));
  std::vector<Int> scales(m.rows(), 1);
  for (const auto& [idx, value] : m.entries()) {
    scales[idx.first] = lcm(scales[idx.first], denominator(value));
  }
  for (const auto& [idx, value] : m.entries()) {
    a[idx.first][idx.second] = numerator(value) * (scales[idx.first] / denominator(value));
  }
  scale_product = 1;
  for (const Int& s : scales) scale_product *= s;
  return a;
}

struct Elimination {
  uint32_t rank = 0;
  int sign = 1;
  Int last_pivot = 1;  // pivot of the final elimination step
};

Elimination bareiss(std::vector<std::vector<Int>>& a) {
  Elimination out;
  if (a.empty()) return out;
  const uint32_t rows = static_cast<uint32_t>(a.size());
  const uint32_t cols = static_cast<uint32_t>(a[0].size());

  Int prev = 1;
  uint32_t pivot_row = 0;
  for (uint32_t col = 0; col < cols && pivot_row < rows; ++col) {
    uint32_t found = pivot_row;
    while (found < rows && a[found][col] == 0) ++found;
    if (found == rows) continue;  // rank-deficient column
    if (found != pivot_row) {
      std::swap(a[found], a[pivot_row]);
      out.sign = -out.sign;
    }
    const Int pivot = a[pivot_row][col];
    for (uint32_t i = pivot_row + 1; i < rows; ++i) {
      for (uint32_t j = col + 1; j < cols; ++j) {
        a[i][j] = checked_div(a[i][j] * pivot - a[i][col] * a[pivot_row][j], prev);
      }
      a[i][col] = 0;
    }
    prev = pivot;
    out.last_pivot = pivot;
    out.rank += 1;
    pivot_row += 1;
  }
  return out;
}

}  // namespace

RatMatrix RatMatrix::identity(uint32_t n) {
  RatMatrix m(n, n);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

const Rat& RatMatrix::at(uint32_t i, uint32_t j) const {
  check_index(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? kZero : it->second;
}

void RatMatrix::set(uint32_t i, uint32_t j, Rat value) {
  check_index(i, j);
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = std::move(value);
  }
}

void RatMatrix::check_index(uint32_t i, uint32_t j) const {
  if (i >= rows_ || j >= cols_) {
    fail(errc::invalid, "matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Rat det4_leibniz(const RatMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    fail(errc::invalid, "det4 requires a 4x4 matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  Rat det = 0;
  for_each_permutation(4, [&](const std::vector<uint32_t>& perm, int sign) {
    Rat product = sign;
    for (uint32_t t = 0; t < 4; ++t) product *= m.at(t, perm[t]);
    det += product;
  });
  return det;
}

Rat det_bareiss(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(errc::invalid, "determinant requires a square matrix, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0) return 1;
  Int scale_product = 1;
  auto a = scale_rows_to_int(m, scale_product);
  const Elimination elim = bareiss(a);
  if (elim.rank < m.rows()) return 0;
  const Int signed_pivot = elim.sign * elim.last_pivot;
  return Rat(signed_pivot, scale_product);
}

uint32_t exact_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Int scale_product = 1;
  auto a = scale_rows_to_int(m, scale_product);
  return bareiss(a).rank;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(errc::invalid, "matrix product dimension mismatch: " + std::to_string(a.cols()) +
                            " columns vs " + std::to_string(b.rows()) + " rows");
  }
  // Group b by row so the sparse product touches only stored entries.
  std::vector<std::vector<std::pair<uint32_t, const Rat*>>> b_rows(b.rows());
  for (const auto& [idx, value] : b.entries()) {
    b_rows[idx.first].emplace_back(idx.second, &value);
  }
  std::map<RatMatrix::Index, Rat> acc;
  for (const auto& [idx, value] : a.entries()) {
    for (const auto& [col, bval] : b_rows[idx.second]) {
      acc[{idx.first, col}] += value * *bval;
    }
  }
  RatMatrix out(a.rows(), b.cols());
  for (auto& [idx, value] : acc) {
    if (value != 0) out.set(idx.first, idx.second, std::move(value));
  }
  return out;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<uint32_t>& rows,
                    const std::vector<uint32_t>& cols) {
  RatMatrix out(static_cast<uint32_t>(rows.size()), static_cast<uint32_t>(cols.size()));
  for (uint32_t i = 0; i < rows.size(); ++i) {
    for (uint32_t j = 0; j < cols.size(); ++j) {
      out.set(i, j, m.at(rows[i], cols[j]));
    }
  }
  return out;
}

}  // namespace armred
