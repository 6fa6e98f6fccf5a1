#pragma once

// Exact arithmetic over Z and Q: polynomials for gcd certification and dense
// rational elimination for rank computations. Nothing here depends on a
// p-adic precision, so results are certain.

#include <gmpxx.h>

#include <vector>

namespace iwasawa::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer polynomial, constant term first, no trailing zeros (zero = {}).
using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
int degree(const ZPoly& a);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// Remainder of a modulo a monic divisor, computed over Z.
ZPoly rem_monic(const ZPoly& a, const ZPoly& monic);
/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
Integer content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);

/// gcd over Q via the subresultant PRS, returned primitive with positive
/// leading coefficient. gcd(0, 0) = {}.
ZPoly gcd(ZPoly a, ZPoly b);
inline int gcd_degree(const ZPoly& a, const ZPoly& b) { return degree(gcd(a, b)); }

/// (1+T)^(p^n) - 1.
ZPoly omega(long p, int n);
/// Phi_{p^k}(1+T), the minimal polynomial of zeta - 1 for zeta of exact
/// order p^k (k >= 1). Monic, Eisenstein at p.
ZPoly shifted_cyclotomic(long p, int k);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by fraction-field Gaussian elimination.
int rank(RationalMatrix m);

}  // namespace iwasawa::exact
