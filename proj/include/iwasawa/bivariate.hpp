#pragma once

#include <span>
#include <vector>

#include "iwasawa/matrix.hpp"
#include "iwasawa/padic.hpp"
#include "iwasawa/series.hpp"

namespace iwasawa {

/// Element of O[[Y,T]] known modulo (p^N, Y^(DY+1), T^(DT+1)).
class BivariateSeries {
 public:
  BivariateSeries(ContextPtr ctx, int y_degree, int t_degree);

  /// rows[j][i] is the coefficient of Y^j T^i; missing entries are zero.
  static BivariateSeries from_rows(ContextPtr ctx, int y_degree, int t_degree,
                                   const std::vector<std::vector<PadicElement>>& rows);
  static BivariateSeries one(ContextPtr ctx, int y_degree, int t_degree);
  /// Embeds a one-variable series as a Y-constant.
  static BivariateSeries from_series(const IwasawaSeries& s, int y_degree);

  const ContextPtr& context() const noexcept { return ctx_; }
  int y_degree() const noexcept { return dy_; }
  int t_degree() const noexcept { return dt_; }
  const PadicElement& operator()(int j, int i) const { return coeffs_[index(j, i)]; }
  PadicElement& operator()(int j, int i) { return coeffs_[index(j, i)]; }

  bool is_zero() const;

  BivariateSeries operator-() const;
  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  BivariateSeries& operator*=(const BivariateSeries& rhs);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(BivariateSeries a, const BivariateSeries& b) { return a *= b; }
  bool operator==(const BivariateSeries& rhs) const;

 private:
  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(dt_ + 1) + static_cast<std::size_t>(i);
  }
  void check_compatible(const BivariateSeries& rhs) const;

  ContextPtr ctx_;
  int dy_;
  int dt_;
  std::vector<PadicElement> coeffs_;
};

/// Evaluation Y = y, for y in the maximal ideal.
IwasawaSeries specialize_Y(const BivariateSeries& f, const PadicElement& y);

BivariateSeries determinant(const Matrix<BivariateSeries>& m);

struct WeightGridEntry {
  int n = 0;
  Integer k;       // (p-1) p^(n+re) + 1
  PadicElement y;  // e-th root of (u^(k-1) - 1) / p^(re), u = 1+p
};

struct WeightGrid {
  int r = 0;
  unsigned long e = 1;
  std::vector<WeightGridEntry> entries;
};

WeightGrid weight_grid(const ContextPtr& ctx, int r, unsigned long e, int n_max);

struct SpecializationReport {
  bool pass = false;
  IwasawaSeries specialized_char;  // canonical form of det(F) at Y = y
  IwasawaSeries char_of_specialized;  // canonical form of det(F(y))
};

/// Throws NotTorsionAfterSpecialization when det(F(y)) vanishes.
SpecializationReport char_specialization_check(const Matrix<BivariateSeries>& pres,
                                               const PadicElement& y);

enum class LimitStatus { Pass, Fail };

struct LimitDivisibilityReport {
  int k = 0;
  LimitStatus status = LimitStatus::Fail;
};

/// Finds the least K <= k_max with a_n | p^K b_n in Lambda for every n, then
/// tests a_lim | p^K b_lim. Throws BoundExceeded when no K works.
LimitDivisibilityReport limit_divisibility_check(std::span<const IwasawaSeries> a_seq,
                                                 std::span<const IwasawaSeries> b_seq,
                                                 const IwasawaSeries& a_lim,
                                                 const IwasawaSeries& b_lim, int k_max);

}  // namespace iwasawa
