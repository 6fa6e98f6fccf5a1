#include <gtest/gtest.h>

#include "iwasawa/series.hpp"
#include "oracles.hpp"

using namespace iwasawa;
using oracle::Integer;

namespace {

IwasawaSeries ints(const ContextPtr& ctx, int d, std::vector<Integer> c) {
  return IwasawaSeries::from_integers(ctx, d, c);
}

// Same coefficients, exactness dropped, so the p-adic code paths run.
IwasawaSeries inexact(IwasawaSeries f) {
  f.drop_exactness();
  return f;
}

OPoly opoly(const ContextPtr& ctx, std::vector<long> c) {
  OPoly out;
  for (long x : c) out.push_back(PadicElement::from_integer(ctx, x));
  return out;
}

IwasawaSeries from_poly(const ContextPtr& ctx, int d, const OPoly& p) {
  return IwasawaSeries::from_coefficients(ctx, d, p);
}

// Random distinguished polynomial of degree lambda.
OPoly random_distinguished(std::mt19937_64& rng, const ContextPtr& ctx, int lambda) {
  OPoly out;
  for (int i = 0; i < lambda; ++i) out.push_back(oracle::random_element(rng, ctx).times_p_power(1));
  out.push_back(PadicElement::from_integer(ctx, 1));
  return out;
}

OPoly random_unit_poly(std::mt19937_64& rng, const ContextPtr& ctx, int deg) {
  OPoly out{oracle::random_unit(rng, ctx)};
  for (int i = 1; i <= deg; ++i) out.push_back(oracle::random_element(rng, ctx));
  return out;
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

TEST(Series, ArithmeticTruncates) {
  const auto ctx = PadicContext::create(5, 1, 4);
  const auto a = ints(ctx, 2, {1, 1});
  const auto sq = a * a * a;  // (1+T)^3 truncated at T^2
  EXPECT_EQ(sq, ints(ctx, 2, {1, 3, 3}));
  EXPECT_FALSE(sq.exact());
  EXPECT_TRUE((a * a).exact());
  EXPECT_EQ(a - a, IwasawaSeries(ctx, 2));
  EXPECT_EQ(ints(ctx, 3, {0, 1}).polynomial_degree(), 1);
}

TEST(Weierstrass, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  {
    const auto w = weierstrass_prepare(ints(ctx, 4, {5, 1}));
    EXPECT_EQ(w.mu, 0);
    EXPECT_EQ(w.distinguished, opoly(ctx, {5, 1}));
    EXPECT_EQ(w.unit, IwasawaSeries::one(ctx, 4));
  }
  {
    const auto w = weierstrass_prepare(ints(ctx, 4, {5, 5}));
    EXPECT_EQ(w.mu, 1);
    EXPECT_EQ(w.lambda(), 0);
    EXPECT_EQ(w.unit, ints(ctx, 4, {1, 1}));
  }
  {
    // (T - p)(T - p^2)(1 + pT)
    const auto p_part = ints(ctx, 6, {-5, 1}) * ints(ctx, 6, {-25, 1});
    const auto f = p_part * ints(ctx, 6, {1, 5});
    const auto w = weierstrass_prepare(f);
    EXPECT_EQ(w.mu, 0);
    EXPECT_EQ(from_poly(ctx, 6, w.distinguished), p_part);
    EXPECT_EQ(w.unit, ints(ctx, 6, {1, 5}));
  }
}

TEST(Weierstrass, Errors) {
  const auto ctx = PadicContext::create(5, 1, 4);
  EXPECT_EQ(kind_of([&] { weierstrass_prepare(IwasawaSeries(ctx, 3)); }), ErrorKind::ZeroAtPrecision);
  EXPECT_EQ(kind_of([&] { weierstrass_prepare(ints(ctx, 3, {5, 5, 5, 1})); }), ErrorKind::InsufficientDegree);
}

TEST(Weierstrass, RoundTripOnRandomSeries) {
  std::mt19937_64 rng(41);
  for (long p : {3L, 5L, 7L}) {
    for (int f : {1, 2}) {
      const auto ctx = PadicContext::create(p, f, 8);
      const int d = 24;
      for (int t = 0; t < 100; ++t) {
        const int mu = static_cast<int>(rng() % 3);
        const int lambda = static_cast<int>(rng() % 8);
        std::vector<PadicElement> c;
        for (int i = 0; i <= d; ++i) {
          auto x = oracle::random_element(rng, ctx);
          if (i < lambda) x = x.times_p_power(1);
          if (i == lambda) x = oracle::random_unit(rng, ctx);
          c.push_back(x.times_p_power(mu));
        }
        const auto g = IwasawaSeries::from_coefficients(ctx, d, c);
        const auto w = weierstrass_prepare(g);
        EXPECT_EQ(w.mu, mu);
        EXPECT_EQ(w.lambda(), lambda);
        EXPECT_TRUE(is_distinguished(w.distinguished));
        EXPECT_TRUE(w.unit[0].is_unit());
        EXPECT_EQ(w.recompose(), g);
      }
    }
  }
}

TEST(Weierstrass, RecoversPlantedFactorisation) {
  std::mt19937_64 rng(42);
  for (int f : {1, 2}) {
    const auto ctx = PadicContext::create(5, f, 8);
    for (int t = 0; t < 100; ++t) {
      const int lambda = static_cast<int>(rng() % 6);
      const auto p0 = random_distinguished(rng, ctx, lambda);
      const auto u0 = random_unit_poly(rng, ctx, static_cast<int>(rng() % 6));
      const int d = 12;
      const auto g = from_poly(ctx, d, poly::multiply(p0, u0));
      const auto w = weierstrass_prepare(g);
      EXPECT_EQ(w.distinguished, p0);
      EXPECT_EQ(w.unit, from_poly(ctx, d, u0));
    }
  }
}

TEST(MuLambda, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  EXPECT_EQ(mu_lambda(ints(ctx, 6, {125, 0, 0, 25})), std::make_pair(2, 3));
  EXPECT_EQ(mu_lambda(IwasawaSeries::one(ctx, 6)), std::make_pair(0, 0));
  EXPECT_EQ(mu_lambda(omega(1, ctx, 6)), std::make_pair(0, 5));
}

TEST(WeierstrassDivide, Examples) {
  const auto ctx = PadicContext::create(5, 1, 5);
  const OPoly pp = opoly(ctx, {5, 1});
  const auto r1 = weierstrass_divide(from_poly(ctx, 4, pp), pp);
  EXPECT_EQ(r1.quotient, IwasawaSeries::one(ctx, 4));
  EXPECT_TRUE(poly::is_zero(r1.remainder));
  const auto r2 = weierstrass_divide(ints(ctx, 4, {0, 0, 1}), opoly(ctx, {0, 1}));
  EXPECT_EQ(r2.quotient, ints(ctx, 4, {0, 1}));
  EXPECT_TRUE(poly::is_zero(r2.remainder));
  EXPECT_EQ(kind_of([&] { weierstrass_divide(ints(ctx, 4, {1}), opoly(ctx, {1, 1})); }),
            ErrorKind::NotDistinguished);
}

TEST(WeierstrassDivide, RoundTripOnRandomInputs) {
  std::mt19937_64 rng(43);
  const auto ctx = PadicContext::create(7, 2, 6);
  const int d = 16;
  for (int t = 0; t < 100; ++t) {
    const int lambda = 1 + static_cast<int>(rng() % 5);
    const auto pp = random_distinguished(rng, ctx, lambda);
    std::vector<PadicElement> c;
    for (int i = 0; i <= d; ++i) c.push_back(oracle::random_element(rng, ctx));
    const auto g = IwasawaSeries::from_coefficients(ctx, d, c);
    const auto qr = weierstrass_divide(g, pp);
    ASSERT_EQ(static_cast<int>(qr.remainder.size()), lambda);
    const auto back = qr.quotient * from_poly(ctx, d, pp) + from_poly(ctx, d, qr.remainder);
    for (int i = 0; i <= d - lambda; ++i) EXPECT_EQ(back[i], g[i]) << "i=" << i;
  }
}

TEST(Omega, ExamplesAndComposition) {
  const auto ctx = PadicContext::create(3, 1, 6);
  EXPECT_EQ(omega(0, ctx, 4), ints(ctx, 4, {0, 1}));
  EXPECT_EQ(omega(1, ctx, 4), ints(ctx, 4, {0, 3, 3, 1}));
  EXPECT_TRUE(omega(2, ctx, 9).exact());
  // omega_2(T) = omega_1((1+T)^3 - 1), by Horner in Lambda.
  const int d = 9;
  const auto inner = omega(1, ctx, d);
  const auto outer = exact::omega(3, 1);
  IwasawaSeries acc(ctx, d);
  for (std::size_t i = outer.size(); i-- > 0;) acc = acc * inner + ints(ctx, d, {outer[i]});
  EXPECT_EQ(acc, omega(2, ctx, d));
  EXPECT_EQ(kind_of([&] { omega(2, ctx, 8); }), ErrorKind::InsufficientDegree);
}

TEST(Evaluate, ExamplesAndIntegerOracle) {
  const auto ctx = PadicContext::create(5, 1, 6);
  const auto five = PadicElement::from_integer(ctx, 5);
  EXPECT_EQ(evaluate(ints(ctx, 3, {7, 1, 2}), PadicElement(ctx)), PadicElement::from_integer(ctx, 7));
  EXPECT_EQ(evaluate(omega(0, ctx, 3), five), five);
  EXPECT_TRUE(evaluate(ints(ctx, 3, {-5, 1}), five).is_zero());
  EXPECT_EQ(kind_of([&] { evaluate(ints(ctx, 3, {1}), PadicElement::from_integer(ctx, 2)); }),
            ErrorKind::NotTopologicallyNilpotent);

  std::mt19937_64 rng(44);
  std::uniform_int_distribution<long> d(-100, 100);
  const Integer m = oracle::power(5, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<Integer> c(7);
    for (auto& x : c) x = d(rng);
    const Integer tt = Integer(5) * d(rng);
    Integer v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * tt + c[i];
    EXPECT_EQ(evaluate(ints(ctx, 6, c), PadicElement::from_integer(ctx, tt)),
              PadicElement::from_integer(ctx, oracle::mod(v, m)));
  }
}

TEST(Divides, Examples) {
  const auto ctx = PadicContext::create(3, 1, 6);
  const int d = 12;
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(divides(ints(ctx, d, {0, 1}), omega(n, ctx, d), false));
  EXPECT_TRUE(divides(ints(ctx, d, {3}), IwasawaSeries::one(ctx, d), true));
  EXPECT_FALSE(divides(ints(ctx, d, {3}), IwasawaSeries::one(ctx, d), false));
  EXPECT_FALSE(divides(ints(ctx, d, {-3, 1}), ints(ctx, d, {0, 1}), true));
  EXPECT_EQ(kind_of([&] { divides(IwasawaSeries(ctx, d), ints(ctx, d, {1}), false); }), ErrorKind::ZeroDivisor);
}

TEST(Divides, ProductsAndAntisymmetry) {
  std::mt19937_64 rng(45);
  const auto ctx = PadicContext::create(5, 1, 8);
  const int d = 16;
  for (int t = 0; t < 100; ++t) {
    const auto f = from_poly(ctx, d, poly::multiply(random_distinguished(rng, ctx, static_cast<int>(rng() % 4)),
                                                     random_unit_poly(rng, ctx, 3)))
                       .times_p_power(static_cast<int>(rng() % 2));
    const auto g = from_poly(ctx, d, poly::multiply(random_distinguished(rng, ctx, static_cast<int>(rng() % 4)),
                                                     random_unit_poly(rng, ctx, 3)));
    EXPECT_TRUE(divides(f, f * g, false));
    const auto unit = from_poly(ctx, d, random_unit_poly(rng, ctx, 2));
    const auto fu = f * unit;
    ASSERT_TRUE(divides(f, fu, false) && divides(fu, f, false));
    const auto wf = weierstrass_prepare(f);
    const auto wu = weierstrass_prepare(fu);
    EXPECT_EQ(wf.mu, wu.mu);
    EXPECT_EQ(wf.distinguished, wu.distinguished);
  }
}

TEST(CoprimeToCyclotomic, Examples) {
  const auto ctx = PadicContext::create(3, 1, 8);
  const int d = 12;
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(coprime_to_cyclotomic(ints(ctx, d, {0, 1}), n));
  const auto phi = ints(ctx, d, exact::shifted_cyclotomic(3, 1));  // omega_1 / omega_0
  EXPECT_TRUE(coprime_to_cyclotomic(phi, 0));
  for (int n = 1; n <= 3; ++n) EXPECT_FALSE(coprime_to_cyclotomic(phi, n));
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(coprime_to_cyclotomic(ints(ctx, d, {-3, 1}), n));
    EXPECT_TRUE(coprime_to_cyclotomic(inexact(ints(ctx, d, {-3, 1})), n));
  }
  // At finite precision a genuine cyclotomic factor cannot be certified.
  EXPECT_EQ(kind_of([&] { coprime_to_cyclotomic(inexact(phi), 1); }), ErrorKind::PrecisionAmbiguous);
}

TEST(ConstantQuotientOrder, ExamplesAndMultiplicativity) {
  const auto ctx = PadicContext::create(5, 1, 8);
  const int d = 8;
  EXPECT_EQ(constant_quotient_order(ints(ctx, d, {-5, 1})), QuotientOrder::finite(1));
  EXPECT_EQ(constant_quotient_order(IwasawaSeries::one(ctx, d)), QuotientOrder::finite(0));
  EXPECT_TRUE(constant_quotient_order(ints(ctx, d, {0, 1})).infinite);
  EXPECT_TRUE(constant_quotient_order(inexact(ints(ctx, d, {0, 1}))).infinite);

  std::mt19937_64 rng(46);
  std::uniform_int_distribution<long> c(1, 30);
  for (int t = 0; t < 100; ++t) {
    const auto f = ints(ctx, d, {Integer(5) * c(rng) + (t % 2 ? 1 : 0), c(rng), 1});
    const auto g = ints(ctx, d, {Integer(c(rng)) * c(rng), 5, 1});
    const auto of = constant_quotient_order(f);
    const auto og = constant_quotient_order(g);
    const auto ofg = constant_quotient_order(f * g);
    if (!of.infinite && !og.infinite && of.q_exponent + og.q_exponent < 8) {
      EXPECT_EQ(ofg, of * og);
    }
  }
}

TEST(ConstantQuotientOrder, ExtensionUsesQ) {
  const auto ctx = PadicContext::create(3, 2, 5);
  // O/(9) has order q^2 = 81.
  const auto o = constant_quotient_order(ints(ctx, 4, {9, 1}));
  EXPECT_EQ(o, QuotientOrder::finite(2));
  EXPECT_EQ(o.to_string(ctx->q()), "81");
}

TEST(OrderOfVanishing, Examples) {
  const auto ctx = PadicContext::create(5, 1, 6);
  EXPECT_EQ(order_of_vanishing_at_zero(ints(ctx, 5, {0, 0, 1, 1})), 2);
  EXPECT_EQ(order_of_vanishing_at_zero(ints(ctx, 5, {5, 1})), 0);
  EXPECT_EQ(order_of_vanishing_at_zero(omega(1, ctx, 5)), 1);
  EXPECT_EQ(order_of_vanishing_at_zero(inexact(omega(1, ctx, 5))), 1);
  EXPECT_EQ(kind_of([&] { order_of_vanishing_at_zero(IwasawaSeries(ctx, 5)); }), ErrorKind::PrecisionAmbiguous);
}
