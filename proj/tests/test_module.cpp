#include <gtest/gtest.h>

#include <set>

#include "iwasawa/module.hpp"
#include "oracles.hpp"

using namespace iwasawa;
using oracle::Integer;
using oracle::Rational;
using exact::ZPoly;

namespace {

IwasawaSeries ints(const ContextPtr& ctx, int d, std::vector<Integer> c) {
  return IwasawaSeries::from_integers(ctx, d, c);
}

ModulePresentation diag(const ContextPtr& ctx, int d, std::vector<IwasawaSeries> entries) {
  const std::size_t n = entries.size();
  Matrix<IwasawaSeries> m(n, n, IwasawaSeries(ctx, d));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = entries[i];
  return {m};
}

template <class F>
ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

// Degree of gcd over Q by the textbook Euclidean algorithm.
int gcd_degree_q(const ZPoly& a, const ZPoly& b) {
  using QPoly = std::vector<Rational>;
  auto trim = [](QPoly& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  QPoly u(a.begin(), a.end()), v(b.begin(), b.end());
  trim(u);
  trim(v);
  while (!v.empty()) {
    while (u.size() >= v.size() && !u.empty()) {
      const Rational c = u.back() / v.back();
      const std::size_t s = u.size() - v.size();
      for (std::size_t i = 0; i < v.size(); ++i) u[s + i] -= c * v[i];
      trim(u);
    }
    std::swap(u, v);
  }
  return static_cast<int>(u.size()) - 1;
}

ZPoly omega_binomial(long p, int n) {
  const unsigned long pn = oracle::power(p, static_cast<unsigned long>(n)).get_ui();
  ZPoly w(pn + 1, 0);
  for (unsigned long k = 1; k <= pn; ++k) mpz_bin_uiui(w[k].get_mpz_t(), pn, k);
  return w;
}

// Random distinguished integer polynomial of degree <= max_deg built from
// pieces with known behaviour at the roots of unity.
ZPoly random_factor(std::mt19937_64& rng, long p, int max_deg) {
  std::uniform_int_distribution<long> c(-3, 3);
  ZPoly out{1};
  while (true) {
    ZPoly piece;
    switch (rng() % 4) {
      case 0: piece = {0, 1}; break;
      case 1: piece = {-p, 1}; break;
      case 2: piece = exact::shifted_cyclotomic(p, 1); break;
      default: {
        const int deg = 1 + static_cast<int>(rng() % 3);
        piece.assign(deg + 1, 0);
        for (int i = 0; i < deg; ++i) piece[i] = Integer(p) * c(rng);
        piece[deg] = 1;
      }
    }
    if (exact::degree(out) + exact::degree(piece) > max_deg) break;
    out = exact::mul(out, piece);
    if (rng() % 2) break;
  }
  if (exact::degree(out) == 0) out = {p, 1};
  return out;
}

StructureData random_structure(std::mt19937_64& rng, long p, int free_rank) {
  StructureData data;
  data.free_rank = free_rank;
  const int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) data.factors.push_back(random_factor(rng, p, 6));
  if (rng() % 2) data.mus.push_back(1 + static_cast<int>(rng() % 3));
  return data;
}

long cokernel_order(const std::vector<std::vector<long>>& a, long m) {
  const std::size_t n = a.size();
  std::set<std::vector<long>> image;
  std::vector<long> v(n, 0);
  while (true) {
    std::vector<long> w(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
      w[i] = ((s % m) + m) % m;
    }
    image.insert(w);
    std::size_t k = 0;
    while (k < n && ++v[k] == m) v[k++] = 0;
    if (k == n) break;
  }
  long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  return total / static_cast<long>(image.size());
}

// Product of random elementary matrices over Lambda.
Matrix<IwasawaSeries> random_unimodular(std::mt19937_64& rng, const ContextPtr& ctx, int d, std::size_t n) {
  const IwasawaSeries zero(ctx, d);
  Matrix<IwasawaSeries> u(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = IwasawaSeries::one(ctx, d);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (j + 1) % n;
    Matrix<IwasawaSeries> e(n, n, zero);
    for (std::size_t k = 0; k < n; ++k) e(k, k) = IwasawaSeries::one(ctx, d);
    e(i, j) = ints(ctx, d, {c(rng), c(rng), c(rng)});
    u = multiply(u, e, zero);
  }
  return u;
}

}  // namespace

TEST(CharSeries, DiagonalAndZeroModule) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const int d = 6;
  const auto ch = char_series(diag(ctx, d, {ints(ctx, d, {-5, 1}), ints(ctx, d, {25})}));
  EXPECT_EQ(ch, ints(ctx, d, {-125, 25}));
  Matrix<IwasawaSeries> u(2, 2, IwasawaSeries(ctx, d));
  u(0, 0) = ints(ctx, d, {1, 1});
  u(0, 1) = ints(ctx, d, {0, 3});
  u(1, 0) = ints(ctx, d, {2});
  u(1, 1) = ints(ctx, d, {-1, 1});  // det = T^2 - 6T - 1, a unit
  EXPECT_EQ(char_series({u}), IwasawaSeries::one(ctx, d));
  EXPECT_EQ(kind_of([&] { char_series(diag(ctx, d, {ints(ctx, d, {1}), IwasawaSeries(ctx, d)})); }),
            ErrorKind::NotTorsion);
}

TEST(CharSeries, InvariantUnderUnimodularTwists) {
  std::mt19937_64 rng(51);
  for (int f : {1, 2}) {
    const auto ctx = PadicContext::create(3, f, 8);
    const int d = 14;
    const IwasawaSeries zero(ctx, d);
    for (int t = 0; t < 30; ++t) {
      std::vector<IwasawaSeries> entries;
      IwasawaSeries expect = IwasawaSeries::one(ctx, d);
      for (int i = 0; i < 3; ++i) {
        const ZPoly pi = random_factor(rng, 3, 2);
        const auto s = ints(ctx, d, pi).times_p_power(static_cast<int>(rng() % 2));
        entries.push_back(s);
        expect = expect * s;
      }
      const auto planted = diag(ctx, d, entries).matrix;
      const auto twisted =
          multiply(multiply(random_unimodular(rng, ctx, d, 3), planted, zero), random_unimodular(rng, ctx, d, 3), zero);
      const auto w = weierstrass_prepare(expect);
      EXPECT_EQ(char_series({twisted}), w.canonical());
      EXPECT_EQ(char_series({planted}), w.canonical());
    }
  }
}

TEST(CharSeries, MultiplicativeOnBlocks) {
  std::mt19937_64 rng(52);
  const auto ctx = PadicContext::create(5, 1, 8);
  const int d = 12;
  const IwasawaSeries zero(ctx, d);
  for (int t = 0; t < 30; ++t) {
    Matrix<IwasawaSeries> a(2, 2, zero), b(1, 1, zero), ab(3, 3, zero);
    std::uniform_int_distribution<long> c(-6, 6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = ints(ctx, d, {c(rng), c(rng), c(rng)});
    b(0, 0) = ints(ctx, d, random_factor(rng, 5, 3));
    if (determinant(a).is_zero()) continue;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) ab(i, j) = a(i, j);
    ab(2, 2) = b(0, 0);
    const auto lhs = char_series({ab});
    const auto rhs = weierstrass_prepare(char_series({a}) * char_series({b})).canonical();
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(PseudoNull, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const int d = 6;
  const std::vector<IwasawaSeries> a{ints(ctx, d, {5}), ints(ctx, d, {0, 1})};
  EXPECT_TRUE(pseudo_null_test(a));
  const std::vector<IwasawaSeries> b{ints(ctx, d, {0, 5})};
  EXPECT_FALSE(pseudo_null_test(b));
  const std::vector<IwasawaSeries> c{ints(ctx, d, {0, 0, 1}), ints(ctx, d, {5, 0, 0, 1})};
  EXPECT_TRUE(pseudo_null_test(c));
  const std::vector<IwasawaSeries> e{ints(ctx, d, {0, 5}), ints(ctx, d, {0, 0, 1})};
  EXPECT_FALSE(pseudo_null_test(e));
}

TEST(PseudoNull, ImpliesUnitCharSeries) {
  std::mt19937_64 rng(53);
  const auto ctx = PadicContext::create(3, 1, 6);
  const int d = 10;
  for (int t = 0; t < 30; ++t) {
    const auto u = random_unimodular(rng, ctx, d, 2);
    const std::vector<IwasawaSeries> minors{determinant(u)};
    ASSERT_TRUE(pseudo_null_test(minors));
    EXPECT_EQ(char_series({u}), IwasawaSeries::one(ctx, d));
  }
}

TEST(CoinvariantRank, Examples) {
  const StructureData t{0, {{0, 1}}, {}};
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(coinvariant_rank(t, 3, n), 1);
  EXPECT_EQ(coinvariant_rank(StructureData{1, {}, {}}, 3, 2), 9);
  const StructureData tp{0, {{-3, 1}}, {}};
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(coinvariant_rank(tp, 3, n), 0);
  EXPECT_EQ(coinvariant_rank_bruteforce(t, 3, 1), 1);
  EXPECT_EQ(coinvariant_rank_bruteforce(tp, 3, 1), 0);
  EXPECT_EQ(coinvariant_rank_bruteforce(StructureData{0, {exact::shifted_cyclotomic(3, 1)}, {}}, 3, 1), 2);
}

TEST(CoinvariantRank, FormulaMatchesBruteForceAndEuclid) {
  std::mt19937_64 rng(54);
  for (long p : {3L, 5L, 7L}) {
    for (int t = 0; t < 40; ++t) {
      const auto data = random_structure(rng, p, static_cast<int>(rng() % 2));
      for (int n = 0; n <= 3; ++n) {
        const auto pn = oracle::power(p, static_cast<unsigned long>(n)).get_si();
        int expect = static_cast<int>(data.free_rank * pn);
        for (const auto& f : data.factors) expect += std::max(0, gcd_degree_q(f, omega_binomial(p, n)));
        EXPECT_EQ(coinvariant_rank(data, p, n), expect);
        EXPECT_EQ(coinvariant_rank_bruteforce(data, p, n), expect);
      }
    }
  }
}

TEST(FiniteQuotientOrder, Examples) {
  const auto ctx = PadicContext::create(3, 1, 4);
  const auto e = [&](long v) { return PadicElement::from_integer(ctx, v); };
  EXPECT_EQ(finite_quotient_order(Matrix<PadicElement>(1, 1, e(3))), QuotientOrder::finite(1));
  EXPECT_EQ(finite_quotient_order(Matrix<PadicElement>(2, 2, std::vector{e(1), e(0), e(0), e(1)})),
            QuotientOrder::finite(0));
  EXPECT_EQ(finite_quotient_order(Matrix<PadicElement>(2, 2, std::vector{e(3), e(0), e(0), e(9)})),
            QuotientOrder::finite(3));
  EXPECT_EQ(cokernel_order({{3, 0}, {0, 9}}, 27), 27);
  EXPECT_TRUE(finite_quotient_order(Matrix<PadicElement>(2, 2, std::vector{e(3), e(6), e(1), e(2)})).infinite);
}

TEST(FiniteQuotientOrder, MatchesCokernelEnumeration) {
  std::mt19937_64 rng(55);
  const long p = 3;
  const int n_prec = 3;
  const long m = 27;
  const auto ctx = PadicContext::create(p, 1, n_prec);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 2;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    std::vector<PadicElement> flat;
    for (auto& row : a)
      for (auto& x : row) {
        x = static_cast<long>(rng() % m);
        if (rng() % 2) x = (x * p) % m;
        flat.push_back(PadicElement::from_integer(ctx, x));
      }
    const auto o = finite_quotient_order(Matrix<PadicElement>(n, n, flat));
    if (o.infinite || o.q_exponent >= n_prec) continue;
    ++checked;
    EXPECT_EQ(o.value(Integer(p)), cokernel_order(a, m));
  }
  EXPECT_GT(checked, 50);
}

TEST(ControlCheck, Examples) {
  const std::vector<int> levels{0, 1, 2, 3};
  EXPECT_TRUE(control_check(StructureData{0, {{0, 1}}, {}}, 3, 1, levels).pass);
  const auto free = control_check(StructureData{1, {}, {}}, 3, 1, levels);
  EXPECT_FALSE(free.pass);
  EXPECT_TRUE(free.rows[0].pass);
  EXPECT_FALSE(free.rows[1].pass);
  EXPECT_EQ(free.rows[3].formula_rank, 27);
  const StructureData tt{0, {exact::mul(ZPoly{0, 1}, ZPoly{-3, 1})}, {}};
  const auto r = control_check(tt, 3, 1, levels);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.rows[i].n, static_cast<int>(i));
}

TEST(ConstantTermCheck, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const int d = 4;
  const auto a = constant_term_check(diag(ctx, d, {ints(ctx, d, {-5, 1})}));
  EXPECT_EQ(a.status, ConstantTermStatus::Pass);
  EXPECT_EQ(a.char_order, QuotientOrder::finite(1));
  EXPECT_EQ(constant_term_check(diag(ctx, d, {ints(ctx, d, {1})})).status, ConstantTermStatus::Pass);
  EXPECT_EQ(constant_term_check(diag(ctx, d, {ints(ctx, d, {0, 1})})).status, ConstantTermStatus::TrivialZero);
}

TEST(ConstantTermCheck, RandomTwistedPresentations) {
  std::mt19937_64 rng(56);
  const auto ctx = PadicContext::create(5, 1, 10);
  const int d = 12;
  const IwasawaSeries zero(ctx, d);
  for (int t = 0; t < 30; ++t) {
    std::vector<IwasawaSeries> entries;
    long expect = 0;
    for (int i = 0; i < 2; ++i) {
      ZPoly f = random_factor(rng, 5, 3);
      if (f[0] == 0) f = {5, 1};
      expect += oracle::int_valuation(f[0], 5);
      entries.push_back(ints(ctx, d, f));
    }
    const auto twisted = multiply(random_unimodular(rng, ctx, d, 2), diag(ctx, d, entries).matrix, zero);
    const auto r = constant_term_check({twisted});
    EXPECT_EQ(r.status, ConstantTermStatus::Pass);
    EXPECT_EQ(r.quotient_order, QuotientOrder::finite(expect));
  }
}

TEST(Structure, PresentationAndValidation) {
  const auto ctx = PadicContext::create(3, 1, 6);
  const StructureData data{0, {{-3, 1}}, {2}};
  const auto pres = presentation_from_structure(data, ctx, 4);
  EXPECT_EQ(pres.size(), 2u);
  EXPECT_EQ(char_series(pres), ints(ctx, 4, {-27, 9}));
  EXPECT_EQ(kind_of([&] { presentation_from_structure(StructureData{1, {}, {}}, ctx, 4); }), ErrorKind::NotTorsion);
  EXPECT_THROW(validate_structure(StructureData{0, {{1, 1}}, {}}, 3), Error);
  EXPECT_THROW(validate_structure(StructureData{0, {}, {0}}, 3), Error);
}
