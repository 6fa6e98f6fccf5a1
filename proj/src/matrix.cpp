#include "iwasawa/matrix.hpp"

#include <algorithm>
#include <utility>

namespace iwasawa {

std::vector<int> elementary_divisor_valuations(const Matrix<PadicElement>& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const std::size_t diag = std::min(rows, cols);
  if (diag == 0) return {};
  Matrix<PadicElement> a = input;
  const int n = a(0, 0).context()->precision();
  std::vector<int> out;
  out.reserve(diag);

  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pr = t, pc = t;
    int best = n;
    for (std::size_t i = t; i < rows && best > 0; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const int v = a(i, j).valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == n) {
      out.resize(diag, n);
      break;
    }
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pc));

    // pivot = p^best * w with w a unit; every remaining entry is p^best * b.
    const PadicElement w_inv = a(t, t).divided_by_p_power(best).inverse();
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a(i, t).is_zero()) continue;
      const PadicElement factor = a(i, t).divided_by_p_power(best) * w_inv;
      for (std::size_t j = t; j < cols; ++j) a(i, j) -= factor * a(t, j);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a(t, j).is_zero()) continue;
      const PadicElement factor = a(t, j).divided_by_p_power(best) * w_inv;
      for (std::size_t i = t; i < rows; ++i) a(i, j) -= factor * a(i, t);
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace iwasawa
