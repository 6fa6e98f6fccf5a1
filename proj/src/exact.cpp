#include "iwasawa/exact.hpp"

#include <algorithm>
#include <utility>

namespace iwasawa::exact {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly rem_monic(const ZPoly& a, const ZPoly& monic) {
  ZPoly r = a;
  trim(r);
  const int dm = degree(monic);
  while (degree(r) >= dm) {
    const Integer c = r.back();
    const int shift = degree(r) - dm;
    for (int j = 0; j <= dm; ++j) r[shift + j] -= c * monic[j];
    trim(r);
  }
  return r;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  trim(r);
  const int db = degree(b);
  const Integer& lb = b.back();
  int steps = degree(r) - db + 1;
  while (degree(r) >= db) {
    const Integer c = r.back();
    const int shift = degree(r) - db;
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[shift + j] -= c * b[j];
    trim(r);
    --steps;
  }
  // Keep the classical normalisation lc(b)^(deg a - deg b + 1).
  for (; steps > 0; --steps) {
    for (auto& x : r) x *= lb;
  }
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  ZPoly r = a;
  trim(r);
  if (r.empty()) return r;
  Integer c = content(r);
  if (r.back() < 0) c = -c;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  if (b.empty()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_rem(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return {1};
    Integer divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return primitive_part(b);
}

ZPoly omega(long p, int n) {
  Integer pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  const unsigned long m = pn.get_ui();
  ZPoly r(m + 1);
  for (unsigned long i = 0; i <= m; ++i) mpz_bin_uiui(r[i].get_mpz_t(), m, i);
  r[0] = 0;
  return r;
}

ZPoly shifted_cyclotomic(long p, int k) {
  // Phi_{p^k}(X) = sum_{j<p} X^(j p^(k-1)), evaluated at X = 1+T.
  Integer step;
  mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 1));
  const unsigned long s = step.get_ui();
  ZPoly r(s * (static_cast<unsigned long>(p) - 1) + 1, 0);
  for (long j = 0; j < p; ++j) {
    const unsigned long m = s * static_cast<unsigned long>(j);
    for (unsigned long i = 0; i <= m; ++i) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), m, i);
      r[i] += b;
    }
  }
  return r;
}

int rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace iwasawa::exact
