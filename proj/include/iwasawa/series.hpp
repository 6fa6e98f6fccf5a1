#pragma once

#include <span>
#include <utility>
#include <vector>

#include "iwasawa/exact.hpp"
#include "iwasawa/padic.hpp"
#include "iwasawa/quotient_order.hpp"

namespace iwasawa {

/// Polynomial over O/p^N, constant term first.
using OPoly = std::vector<PadicElement>;

/// Element of Lambda = O[[T]] known modulo (p^N, T^(D+1)).
///
/// Algorithms that need more than the retained window (Weierstrass
/// preparation, division) treat the series as the polynomial formed by its
/// D+1 coefficients. An exact series additionally carries the integer
/// coordinates of a genuine polynomial in Z[x]/(modulus)[T] of degree <= D;
/// those drive the certified gcd paths. Arithmetic keeps exactness while the
/// result still fits in the window.
class IwasawaSeries {
 public:
  IwasawaSeries(ContextPtr ctx, int degree_bound);

  static IwasawaSeries from_coefficients(ContextPtr ctx, int degree_bound,
                                         std::vector<PadicElement> coeffs);
  /// Exact series with rational-integer coefficients.
  static IwasawaSeries from_integers(ContextPtr ctx, int degree_bound,
                                     const std::vector<Integer>& coeffs);
  /// Exact series; coords[i] holds the f integer coordinates of T^i.
  static IwasawaSeries from_exact_coordinates(ContextPtr ctx, int degree_bound,
                                              std::vector<std::vector<Integer>> coords);
  static IwasawaSeries constant(ContextPtr ctx, int degree_bound,
                                const PadicElement& c);
  static IwasawaSeries one(ContextPtr ctx, int degree_bound);

  const ContextPtr& context() const noexcept { return ctx_; }
  int degree_bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const PadicElement& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const PadicElement> coefficients() const noexcept { return coeffs_; }
  bool exact() const noexcept { return !exact_coords_.empty(); }
  /// Integer coordinates of every coefficient; empty unless exact().
  const std::vector<std::vector<Integer>>& exact_coordinates() const noexcept {
    return exact_coords_;
  }
  void drop_exactness() { exact_coords_.clear(); }

  bool is_zero() const;
  /// Index of the last nonzero coefficient, -1 for zero.
  int polynomial_degree() const;
  /// Same coefficients in a different truncation window.
  IwasawaSeries with_degree_bound(int degree_bound) const;

  IwasawaSeries operator-() const;
  IwasawaSeries& operator+=(const IwasawaSeries& rhs);
  IwasawaSeries& operator-=(const IwasawaSeries& rhs);
  IwasawaSeries& operator*=(const IwasawaSeries& rhs);
  friend IwasawaSeries operator+(IwasawaSeries a, const IwasawaSeries& b) { return a += b; }
  friend IwasawaSeries operator-(IwasawaSeries a, const IwasawaSeries& b) { return a -= b; }
  friend IwasawaSeries operator*(IwasawaSeries a, const IwasawaSeries& b) { return a *= b; }
  IwasawaSeries scaled(const PadicElement& c) const;
  IwasawaSeries times_p_power(int k) const;

  /// Coefficientwise equality at precision; the exact flag is ignored.
  bool operator==(const IwasawaSeries& rhs) const;

 private:
  void check_compatible(const IwasawaSeries& rhs) const;

  ContextPtr ctx_;
  std::vector<PadicElement> coeffs_;
  std::vector<std::vector<Integer>> exact_coords_;
};

/// f = p^mu * P * unit, with P distinguished of degree lambda.
struct WeierstrassData {
  int mu = 0;
  /// Monic, non-leading coefficients divisible by p; meaningful modulo
  /// p^(N - mu) and stored as canonical residues modulo that power.
  OPoly distinguished;
  IwasawaSeries unit;
  /// N - mu, the p-adic precision of `distinguished` and `unit`.
  int precision = 0;

  int lambda() const { return static_cast<int>(distinguished.size()) - 1; }
  /// p^mu * P as a series in the window of `unit`.
  IwasawaSeries canonical() const;
  /// p^mu * P * unit.
  IwasawaSeries recompose() const;
};

bool is_distinguished(std::span<const PadicElement> poly);

WeierstrassData weierstrass_prepare(const IwasawaSeries& f);

struct WeierstrassQuotient {
  IwasawaSeries quotient;
  OPoly remainder;  // degree < deg P (size deg P)
};

/// g = q P + r with deg r < deg P.
WeierstrassQuotient weierstrass_divide(const IwasawaSeries& g,
                                       std::span<const PadicElement> distinguished);

std::pair<int, int> mu_lambda(const IwasawaSeries& f);

/// (1+T)^(p^n) - 1, flagged exact.
IwasawaSeries omega(int n, const ContextPtr& ctx, int degree_bound);

/// sum f_i t^i for t in the maximal ideal.
PadicElement evaluate(const IwasawaSeries& f, const PadicElement& t);

/// Divisibility in Lambda, or in Lambda[1/p] when invert_p is set.
bool divides(const IwasawaSeries& f, const IwasawaSeries& g, bool invert_p);

/// True iff f shares no root with omega_n / T, i.e. no factor
/// Phi_{p^k}(1+T) with 1 <= k <= n divides f.
bool coprime_to_cyclotomic(const IwasawaSeries& f, int n);

/// #(O / f(0)), INFINITE when f(0) vanishes at precision.
QuotientOrder constant_quotient_order(const IwasawaSeries& f);

int order_of_vanishing_at_zero(const IwasawaSeries& f);

/// One integer polynomial per O-coordinate of an exact series.
std::vector<exact::ZPoly> coordinate_polynomials(const IwasawaSeries& f);

namespace poly {

OPoly trimmed(OPoly a);
OPoly multiply(const OPoly& a, const OPoly& b);
/// Remainder modulo a monic polynomial.
OPoly remainder_monic(const OPoly& a, std::span<const PadicElement> monic);
bool is_zero(std::span<const PadicElement> a);

}  // namespace poly

}  // namespace iwasawa
