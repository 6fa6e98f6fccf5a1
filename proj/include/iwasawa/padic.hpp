#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "iwasawa/errors.hpp"

namespace iwasawa {

using Integer = mpz_class;

class PadicContext;
using ContextPtr = std::shared_ptr<const PadicContext>;

/// The ring O/p^N, where O is the ring of integers of the unramified
/// extension of Q_p of degree f, presented as Z_p[x]/(modulus).
class PadicContext : public std::enable_shared_from_this<PadicContext> {
 public:
  /// Picks the first monic irreducible modulus in lexicographic order.
  static ContextPtr create(long p, int degree, int precision);
  /// `modulus` lists f+1 integer coefficients, constant term first; must be
  /// monic and irreducible modulo p.
  static ContextPtr create(long p, int degree, int precision,
                           std::vector<Integer> modulus);

  long p() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  int precision() const noexcept { return precision_; }
  const Integer& q() const noexcept { return q_; }
  /// p^N.
  const Integer& modulus_value() const noexcept { return pN_; }
  const std::vector<Integer>& modulus() const noexcept { return modulus_; }

  Integer p_power(int k) const;

  /// Same residue field and modulus, different coefficient precision.
  ContextPtr with_precision(int precision) const;

  /// True when both contexts describe the same ring O (precision ignored).
  bool same_ring(const PadicContext& other) const;
  bool operator==(const PadicContext& other) const {
    return same_ring(other) && precision_ == other.precision_;
  }

 private:
  PadicContext(long p, int degree, int precision, std::vector<Integer> modulus);

  long p_;
  int degree_;
  int precision_;
  Integer q_;
  Integer pN_;
  std::vector<Integer> modulus_;
};

/// Element of O/p^N in the power basis of the context modulus. Coordinates
/// are canonical residues in [0, p^N).
class PadicElement {
 public:
  explicit PadicElement(ContextPtr ctx);

  static PadicElement from_integer(ContextPtr ctx, const Integer& value);
  static PadicElement from_integer(ContextPtr ctx, long value) {
    return from_integer(std::move(ctx), Integer(value));
  }
  static PadicElement from_coordinates(ContextPtr ctx,
                                       std::vector<Integer> coords);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Integer> coordinates() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_unit() const;
  /// Largest k <= N with p^k dividing every coordinate.
  int valuation() const;

  PadicElement operator-() const;
  PadicElement& operator+=(const PadicElement& rhs);
  PadicElement& operator-=(const PadicElement& rhs);
  PadicElement& operator*=(const PadicElement& rhs);
  friend PadicElement operator+(PadicElement a, const PadicElement& b) {
    return a += b;
  }
  friend PadicElement operator-(PadicElement a, const PadicElement& b) {
    return a -= b;
  }
  friend PadicElement operator*(PadicElement a, const PadicElement& b) {
    return a *= b;
  }
  bool operator==(const PadicElement& rhs) const;

  PadicElement pow(const Integer& exponent) const;
  PadicElement pow(unsigned long exponent) const { return pow(Integer(exponent)); }
  /// Throws NonUnit.
  PadicElement inverse() const;

  /// Multiplication by p^k.
  PadicElement times_p_power(int k) const;
  /// Exact division by p^k of every coordinate; requires valuation() >= k.
  /// The result is only meaningful modulo p^(N-k).
  PadicElement divided_by_p_power(int k) const;
  /// Canonical representative modulo p^k (k <= N), higher digits cleared.
  PadicElement truncated(int k) const;
  /// Same coordinates, viewed in another context of the same ring.
  PadicElement in_context(ContextPtr other) const;

  /// Coordinates reduced modulo p.
  std::vector<long> residue() const;
  /// Representative of coordinate i in (-p^N/2, p^N/2].
  Integer balanced_coordinate(std::size_t i) const;

  std::string to_string() const;

 private:
  PadicElement(ContextPtr ctx, std::vector<Integer> coords);
  void normalize();

  ContextPtr ctx_;
  std::vector<Integer> coords_;
};

int valuation(const PadicElement& x);

/// The (q-1)-st root of unity congruent to x modulo p. Throws NonUnit.
PadicElement teichmuller(const PadicElement& x);

/// Iwasawa logarithm of a unit, normalised through u^(q-1). The result is
/// exact modulo p^N: guard digits absorb the divisions by k in the series.
PadicElement iwasawa_log(const PadicElement& u);

/// Some y with y^e = c at precision; the Hensel lift of the lexicographically
/// smallest residue-field root is chosen.
PadicElement nth_root(const PadicElement& c, unsigned long e);

/// Primitive m-th root of unity (m | q-1) obtained as a Teichmuller lift.
PadicElement primitive_root_of_unity(const ContextPtr& ctx, unsigned long m);

/// Lexicographic comparison on residues, coordinate 0 first, then on the
/// full canonical coordinates.
bool residue_less(const PadicElement& a, const PadicElement& b);

/// True when m (constant term first) is irreducible over F_p.
bool irreducible_mod_p(std::span<const Integer> monic, long p);

bool is_odd_prime(long p);

}  // namespace iwasawa
