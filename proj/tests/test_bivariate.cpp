#include <gtest/gtest.h>

#include "iwasawa/bivariate.hpp"
#include "oracles.hpp"

using namespace iwasawa;
using oracle::Integer;

namespace {

using IntRows = std::vector<std::vector<Integer>>;

BivariateSeries biv(const ContextPtr& ctx, int dy, int dt, const IntRows& rows) {
  std::vector<std::vector<PadicElement>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const auto& x : row) r.back().push_back(PadicElement::from_integer(ctx, x));
  }
  return BivariateSeries::from_rows(ctx, dy, dt, r);
}

IntRows random_rows(std::mt19937_64& rng, int dy, int dt, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntRows rows(dy + 1, std::vector<Integer>(dt + 1));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return rows;
}

IwasawaSeries ints(const ContextPtr& ctx, int d, std::vector<Integer> c) {
  return IwasawaSeries::from_integers(ctx, d, c);
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

}  // namespace

TEST(Specialize, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const auto f = biv(ctx, 2, 3, {{0, 0, 1}, {0, 1}});  // T^2 + Y T
  const auto at_p = specialize_Y(f, PadicElement::from_integer(ctx, 5));
  EXPECT_EQ(at_p.context()->precision(), 3);  // (DY + 1) v(y)
  EXPECT_EQ(at_p, IwasawaSeries::from_integers(at_p.context(), 3, {0, 5, 1}));
  const auto at_0 = specialize_Y(biv(ctx, 2, 3, {{1, 2}, {3, 4}, {5}}), PadicElement(ctx));
  EXPECT_EQ(at_0, ints(ctx, 3, {1, 2}));
  EXPECT_EQ(kind_of([&] { specialize_Y(f, PadicElement::from_integer(ctx, 2)); }),
            ErrorKind::NotTopologicallyNilpotent);
}

TEST(Specialize, MatchesIntegerEvaluation) {
  std::mt19937_64 rng(61);
  const long p = 3;
  const auto ctx = PadicContext::create(p, 1, 8);
  for (int t = 0; t < 100; ++t) {
    const int dy = static_cast<int>(rng() % 4);
    const int dt = static_cast<int>(rng() % 4);
    const auto rows = random_rows(rng, dy, dt, 50);
    const Integer y = Integer(p) * static_cast<long>(1 + rng() % 20) * (rng() % 2 ? 1 : p);
    const int vy = oracle::int_valuation(y, p);
    const int prec = std::min(8, (dy + 1) * vy);
    const auto s = specialize_Y(biv(ctx, dy, dt, rows), PadicElement::from_integer(ctx, y));
    ASSERT_EQ(s.context()->precision(), prec);
    const Integer m = oracle::power(p, static_cast<unsigned long>(prec));
    for (int i = 0; i <= dt; ++i) {
      Integer v = 0;
      for (int j = dy; j >= 0; --j) v = v * y + rows[j][i];
      EXPECT_EQ(s[i], PadicElement::from_integer(s.context(), oracle::mod(v, m)));
    }
  }
}

TEST(Specialize, RingHomomorphism) {
  std::mt19937_64 rng(62);
  for (int f : {1, 2}) {
    const auto ctx = PadicContext::create(5, f, 6);
    for (int t = 0; t < 50; ++t) {
      const auto a = biv(ctx, 3, 3, random_rows(rng, 3, 3, 30));
      const auto b = biv(ctx, 3, 3, random_rows(rng, 3, 3, 30));
      const auto y = oracle::random_element(rng, ctx).times_p_power(1);
      EXPECT_EQ(specialize_Y(a * b, y), specialize_Y(a, y) * specialize_Y(b, y));
      EXPECT_EQ(specialize_Y(a + b, y), specialize_Y(a, y) + specialize_Y(b, y));
    }
  }
}

TEST(Specialize, ContinuityInY) {
  std::mt19937_64 rng(63);
  const auto ctx = PadicContext::create(5, 1, 8);
  for (int t = 0; t < 50; ++t) {
    const auto f = biv(ctx, 4, 3, random_rows(rng, 4, 3, 30));
    const auto y = oracle::random_element(rng, ctx).times_p_power(1);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto y2 = y + oracle::random_element(rng, ctx).times_p_power(k);
    const auto a = specialize_Y(f, y);
    const auto b = specialize_Y(f, y2);
    // F(y) - F(y') is divisible by y - y'.
    const int bound = std::min({k, a.context()->precision(), b.context()->precision()});
    for (int i = 0; i <= 3; ++i) {
      EXPECT_GE((a[i].truncated(bound) - b[i].truncated(bound)).valuation(), bound);
    }
  }
}

TEST(BivariateDeterminant, CommutesWithSpecialization) {
  std::mt19937_64 rng(64);
  const auto ctx = PadicContext::create(3, 1, 8);
  const int dy = 3, dt = 4;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<BivariateSeries> entries;
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(biv(ctx, dy, dt, random_rows(rng, dy, dt, 10)));
    const Matrix<BivariateSeries> m(n, n, entries);
    const auto y = PadicElement::from_integer(ctx, 3 * static_cast<long>(1 + rng() % 8));
    const auto lhs = specialize_Y(determinant(m), y);
    const auto sm = m.map([&](const BivariateSeries& s) { return specialize_Y(s, y); });
    const auto& sctx = sm(0, 0).context();
    const auto rhs = determinant(sm, IwasawaSeries(sctx, dt), IwasawaSeries::one(sctx, dt));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(WeightGrid, ValuationsAndValues) {
  const long p = 5;
  const auto ctx = PadicContext::create(p, 1, 10);
  const Integer m = oracle::power(p, 10);
  const auto g = weight_grid(ctx, 0, 1, 4);
  ASSERT_EQ(g.entries.size(), 5u);
  for (const auto& e : g.entries) {
    const Integer pn = oracle::power(p, static_cast<unsigned long>(e.n));
    EXPECT_EQ(e.k, (p - 1) * pn + 1);
    const Integer expect = oracle::mod(oracle::powmod(Integer(1 + p), (p - 1) * pn, m) - 1, m);
    EXPECT_EQ(e.y, PadicElement::from_integer(ctx, expect));
    EXPECT_EQ(e.y.valuation(), e.n + 1);
  }
  for (int r : {1, 2}) {
    const auto gr = weight_grid(ctx, r, 1, 3);
    for (const auto& e : gr.entries) {
      const Integer pre = oracle::power(p, static_cast<unsigned long>(r));
      EXPECT_EQ(e.k, (p - 1) * oracle::power(p, static_cast<unsigned long>(e.n + r)) + 1);
      Integer full;
      mpz_pow_ui(full.get_mpz_t(), Integer(1 + p).get_mpz_t(), Integer(e.k - 1).get_ui());
      const Integer expect = oracle::mod((full - 1) / pre, m);
      EXPECT_EQ(e.y, PadicElement::from_integer(ctx, expect));
      EXPECT_EQ(e.y.valuation(), e.n + 1);
    }
  }
}

TEST(WeightGrid, SmallExampleAndRoots) {
  const auto ctx3 = PadicContext::create(3, 1, 5);
  const auto g = weight_grid(ctx3, 0, 1, 0);
  EXPECT_EQ(g.entries[0].k, 3);
  EXPECT_EQ(g.entries[0].y, PadicElement::from_integer(ctx3, 15));
  EXPECT_EQ(g.entries[0].y.valuation(), 1);
  // y_0 has valuation 1, so no square root exists in the unramified ring.
  const auto ctx5 = PadicContext::create(5, 1, 6);
  EXPECT_EQ(kind_of([&] { weight_grid(ctx5, 0, 2, 1); }), ErrorKind::RamifiedRoot);
  EXPECT_EQ(kind_of([&] { weight_grid(ctx5, 0, 5, 0); }), ErrorKind::WildExponent);
}

TEST(CharSpecialization, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const int dy = 2, dt = 4;
  const BivariateSeries zero(ctx, dy, dt);
  Matrix<BivariateSeries> m(2, 2, zero);
  m(0, 0) = biv(ctx, dy, dt, {{0, 1}, {-1}});  // T - Y
  m(1, 1) = biv(ctx, dy, dt, {{5}});
  const auto r = char_specialization_check(m, PadicElement::from_integer(ctx, 5));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.char_of_specialized, IwasawaSeries::from_integers(r.char_of_specialized.context(), dt, {-25, 5}));

  Matrix<BivariateSeries> y_div(1, 1, biv(ctx, dy, dt, {{0}, {1, 1}}));  // Y(1+T)
  EXPECT_EQ(kind_of([&] { char_specialization_check(y_div, PadicElement(ctx)); }),
            ErrorKind::NotTorsionAfterSpecialization);
}

TEST(CharSpecialization, TwistedDiagonalAtGridPoint) {
  std::mt19937_64 rng(65);
  const auto ctx = PadicContext::create(3, 1, 8);
  const auto y0 = weight_grid(ctx, 0, 1, 0).entries[0].y;
  const int dy = 3, dt = 8;
  const BivariateSeries zero(ctx, dy, dt);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int t = 0; t < 30; ++t) {
    Matrix<BivariateSeries> d(2, 2, zero), u(2, 2, zero);
    d(0, 0) = biv(ctx, dy, dt, {{-3 * c(rng), 1}, {c(rng)}});
    d(1, 1) = biv(ctx, dy, dt, {{3 * (1 + rng() % 3), c(rng)}, {0, c(rng)}});
    u(0, 0) = BivariateSeries::one(ctx, dy, dt);
    u(1, 1) = BivariateSeries::one(ctx, dy, dt);
    u(0, 1) = biv(ctx, dy, dt, {{c(rng), c(rng)}, {c(rng)}});
    const auto twisted = multiply(u, d, zero);
    EXPECT_TRUE(char_specialization_check(twisted, y0).pass);
  }
}

TEST(LimitDivisibility, Examples) {
  const auto ctx = PadicContext::create(5, 1, 8);
  const int d = 8;
  std::vector<IwasawaSeries> a, b;
  for (int n = 1; n <= 5; ++n) {
    const auto an = ints(ctx, d, {-5 + oracle::power(5, static_cast<unsigned long>(n)), 1});
    a.push_back(an);
    b.push_back(an * ints(ctx, d, {1, 1}));
  }
  const auto a_lim = ints(ctx, d, {-5, 1});
  const auto r = limit_divisibility_check(a, b, a_lim, a_lim * ints(ctx, d, {1, 1}), 3);
  EXPECT_EQ(r.k, 0);
  EXPECT_EQ(r.status, LimitStatus::Pass);

  // Perturbed limit: T - p does not divide 1 + T.
  EXPECT_EQ(limit_divisibility_check(a, b, a_lim, ints(ctx, d, {1, 1}), 3).status, LimitStatus::Fail);

  std::vector<IwasawaSeries> pa, pb;
  for (int n = 0; n < 4; ++n) {
    const auto cn = ints(ctx, d, {n + 1, 1});
    pa.push_back(cn.times_p_power(1));
    pb.push_back(cn);
  }
  const auto lim = ints(ctx, d, {1, 1});
  const auto r1 = limit_divisibility_check(pa, pb, lim.times_p_power(1), lim, 3);
  EXPECT_EQ(r1.k, 1);
  EXPECT_EQ(r1.status, LimitStatus::Pass);

  EXPECT_EQ(kind_of([&] { limit_divisibility_check(pa, pb, IwasawaSeries(ctx, d), lim, 3); }),
            ErrorKind::PreconditionViolation);
  std::vector<IwasawaSeries> p3;
  for (const auto& x : pb) p3.push_back(x.times_p_power(3));
  EXPECT_EQ(kind_of([&] { limit_divisibility_check(p3, pb, lim.times_p_power(3), lim, 2); }),
            ErrorKind::BoundExceeded);
}

TEST(LimitDivisibility, ConstructedCofactors) {
  std::mt19937_64 rng(66);
  const auto ctx = PadicContext::create(5, 1, 10);
  const int d = 10;
  std::uniform_int_distribution<long> c(-4, 4);
  for (int t = 0; t < 30; ++t) {
    const int k = static_cast<int>(rng() % 4);
    const auto lim_a = ints(ctx, d, {5 * c(rng), c(rng), 1});
    const auto cof = ints(ctx, d, {1 + 5 * c(rng), c(rng)});
    std::vector<IwasawaSeries> a, b;
    for (int n = 2; n <= 6; ++n) {
      const auto an = lim_a + ints(ctx, d, {oracle::power(5, static_cast<unsigned long>(n))});
      a.push_back(an.times_p_power(k));
      b.push_back(an * cof);
    }
    const auto r = limit_divisibility_check(a, b, lim_a.times_p_power(k), lim_a * cof, 3);
    EXPECT_EQ(r.k, k);
    EXPECT_EQ(r.status, LimitStatus::Pass);
  }
}
