#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

/// Dense row-major matrix over any commutative ring type.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F&& fn) const -> Matrix<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(fn(x));
    return Matrix<S>(rows_, cols_, std::move(out));
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <class R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b, const R& zero) {
  if (a.cols() != b.rows()) fail(ErrorKind::InvalidInput, "matrix shape mismatch");
  Matrix<R> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

constexpr std::size_t kMaxDeterminantSize = 16;

/// Division-free determinant: Laplace expansion memoised over the set of
/// columns already used, O(2^n n) ring operations.
template <class R>
R determinant(const Matrix<R>& m, const R& zero, const R& one) {
  if (!m.square()) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n > kMaxDeterminantSize) {
    fail(ErrorKind::SizeLimit, "determinant size " + std::to_string(n) + " exceeds limit");
  }
  std::vector<R> partial(std::size_t{1} << n, zero);
  std::vector<bool> reached(partial.size(), false);
  partial[0] = one;
  reached[0] = true;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    if (!reached[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      // Each chosen column to the right of `col` is one inversion.
      const int inversions = std::popcount(mask >> (col + 1));
      const std::uint32_t next = mask | (1u << col);
      R term = partial[mask] * m(row, col);
      if (inversions % 2) {
        partial[next] -= term;
      } else {
        partial[next] += term;
      }
      reached[next] = true;
    }
  }
  return partial.back();
}

/// Valuations of the diagonal of the Smith normal form over O/p^N
/// (min(rows, cols) entries, nondecreasing; N stands for zero).
std::vector<int> elementary_divisor_valuations(const Matrix<PadicElement>& m);

}  // namespace iwasawa
