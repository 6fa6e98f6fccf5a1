#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "iwasawa/matrix.hpp"
#include "oracles.hpp"

using namespace iwasawa;
using oracle::Integer;

namespace {

// Leibniz formula over Z.
Integer leibniz(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Order of the cokernel of A on (Z/m)^n, by enumerating the image.
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

}  // namespace

TEST(Determinant, MatchesLeibnizOverIntegers) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    std::vector<Integer> flat;
    for (auto& row : rows)
      for (auto& x : row) {
        x = d(rng);
        flat.push_back(x);
      }
    const Matrix<Integer> m(n, n, flat);
    EXPECT_EQ(determinant(m, Integer(0), Integer(1)), leibniz(rows));
  }
}

TEST(Determinant, PadicAgreesWithIntegerReduction) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> d(-50, 50);
  const auto ctx = PadicContext::create(5, 1, 4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    std::vector<PadicElement> flat;
    for (auto& row : rows)
      for (auto& x : row) {
        x = d(rng);
        flat.push_back(PadicElement::from_integer(ctx, x));
      }
    const Matrix<PadicElement> m(n, n, flat);
    EXPECT_EQ(determinant(m, PadicElement(ctx), PadicElement::from_integer(ctx, 1)),
              PadicElement::from_integer(ctx, leibniz(rows)));
  }
}

TEST(Determinant, SizeLimit) {
  const Matrix<Integer> big(kMaxDeterminantSize + 1, kMaxDeterminantSize + 1, Integer(0));
  EXPECT_THROW(determinant(big, Integer(0), Integer(1)), Error);
}

TEST(SmithValuations, DiagonalExample) {
  const auto ctx = PadicContext::create(5, 1, 4);
  Matrix<PadicElement> a(2, 2, PadicElement(ctx));
  a(0, 0) = PadicElement::from_integer(ctx, 25);
  a(1, 1) = PadicElement::from_integer(ctx, 5);
  EXPECT_EQ(elementary_divisor_valuations(a), (std::vector<int>{1, 2}));
  a(1, 1) = PadicElement(ctx);
  EXPECT_EQ(elementary_divisor_valuations(a), (std::vector<int>{2, 4}));
}

TEST(SmithValuations, MatchCokernelEnumeration) {
  std::mt19937_64 rng(33);
  const long p = 3;
  const int n_prec = 2;
  const long m = 9;
  const auto ctx = PadicContext::create(p, 1, n_prec);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    std::vector<PadicElement> flat;
    for (auto& row : a)
      for (auto& x : row) {
        // Bias towards multiples of p so that non-trivial cokernels appear.
        x = static_cast<long>(rng() % m);
        if (rng() % 2) x = (x * p) % m;
        flat.push_back(PadicElement::from_integer(ctx, x));
      }
    const auto vals = elementary_divisor_valuations(Matrix<PadicElement>(n, n, flat));
    long order = 1;
    for (int v : vals) order *= oracle::power(p, static_cast<unsigned long>(v)).get_si();
    EXPECT_EQ(order, cokernel_order(a, m));
    EXPECT_TRUE(std::is_sorted(vals.begin(), vals.end()));
  }
}

TEST(Multiply, IdentityAndShapes) {
  const Matrix<Integer> a(2, 3, std::vector<Integer>{1, 2, 3, 4, 5, 6});
  const Matrix<Integer> id(3, 3, std::vector<Integer>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  const auto c = multiply(a, id, Integer(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c(i, j), a(i, j));
  EXPECT_THROW(multiply(id, a, Integer(0)), Error);
}
