#include "iwasawa/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace iwasawa {

namespace {

// Dense polynomials over F_p, constant term first.
using Fp = std::vector<long>;

long mod_p(long long v, long p) {
  long r = static_cast<long>(v % p);
  return r < 0 ? r + p : r;
}

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p) {
  long long t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    long long quot = r / new_r;
    t = t - quot * new_t;
    std::swap(t, new_t);
    r = r - quot * new_r;
    std::swap(r, new_r);
  }
  return mod_p(t, p);
}

Fp fp_rem(Fp a, const Fp& m, long p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const long lead_inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const long c = mod_p(static_cast<long long>(a.back()) * lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = mod_p(a[shift + j] - static_cast<long long>(c) * m[j], p);
    }
    trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, long p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod_p(r[i + j] + static_cast<long long>(a[i]) * b[j], p);
    }
  }
  return fp_rem(std::move(r), m, p);
}

Fp fp_powmod(Fp base, long e, const Fp& m, long p) {
  Fp result{1};
  base = fp_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Fp fp_gcd(Fp a, Fp b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int integer_valuation(const Integer& v, long p, int cap) {
  if (v == 0) return cap;
  Integer t = v;
  int k = 0;
  while (k < cap && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

// Calls visit(coords) on every element of F_q, coordinate 0 most
// significant, until it returns true. Returns the accepted coordinates.
template <typename Visit>
std::vector<long> scan_residue_field(long p, int degree, Visit&& visit) {
  std::vector<long> digits(degree, 0);
  while (true) {
    if (visit(digits)) return digits;
    int i = degree - 1;
    while (i >= 0 && ++digits[i] == p) {
      digits[i] = 0;
      --i;
    }
    if (i < 0) return {};
  }
}

constexpr long kResidueScanLimit = 1L << 22;

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

bool irreducible_mod_p(std::span<const Integer> monic, long p) {
  Fp m;
  for (const auto& c : monic) m.push_back(mod_p(mpz_fdiv_ui(c.get_mpz_t(), p), p));
  trim(m);
  const long n = static_cast<long>(m.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod m and gcd(x^(p^(n/r)) - x, m) = 1 for primes r | n.
  auto frobenius_iterate = [&](long times) {
    Fp h{0, 1};
    for (long i = 0; i < times; ++i) h = fp_powmod(h, p, m, p);
    return h;
  };
  Fp top = frobenius_iterate(n);
  Fp x = fp_rem(Fp{0, 1}, m, p);
  trim(top);
  if (top != x) return false;
  for (long r : prime_divisors(n)) {
    Fp h = frobenius_iterate(n / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = mod_p(h[1] - 1, p);
    trim(h);
    if (h.empty()) return false;
    if (fp_gcd(h, m, p).size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PadicContext

PadicContext::PadicContext(long p, int degree, int precision,
                           std::vector<Integer> modulus)
    : p_(p), degree_(degree), precision_(precision), modulus_(std::move(modulus)) {
  mpz_ui_pow_ui(q_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(degree));
  mpz_ui_pow_ui(pN_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(precision));
}

ContextPtr PadicContext::create(long p, int degree, int precision) {
  if (!is_odd_prime(p)) fail(ErrorKind::InvalidContext, "p must be an odd prime, got " + std::to_string(p));
  if (degree < 1) fail(ErrorKind::InvalidContext, "residue degree must be >= 1");
  std::vector<Integer> modulus(degree + 1, 0);
  modulus[degree] = 1;
  if (degree == 1) return create(p, degree, precision, modulus);
  std::vector<long> found = scan_residue_field(p, degree, [&](const std::vector<long>& digits) {
    // digits[0] is the most significant, i.e. the x^(f-1) coefficient.
    for (int i = 0; i < degree; ++i) modulus[i] = digits[degree - 1 - i];
    return irreducible_mod_p(modulus, p);
  });
  if (found.empty()) fail(ErrorKind::InvalidContext, "no irreducible modulus found");
  return create(p, degree, precision, modulus);
}

ContextPtr PadicContext::create(long p, int degree, int precision,
                                std::vector<Integer> modulus) {
  if (!is_odd_prime(p)) fail(ErrorKind::InvalidContext, "p must be an odd prime, got " + std::to_string(p));
  if (p >= (1L << 31)) fail(ErrorKind::InvalidContext, "p must be below 2^31");
  if (degree < 1) fail(ErrorKind::InvalidContext, "residue degree must be >= 1");
  if (precision < 1) fail(ErrorKind::InvalidContext, "precision must be >= 1");
  if (static_cast<int>(modulus.size()) != degree + 1 || modulus.back() != 1) {
    fail(ErrorKind::InvalidContext, "modulus must be monic of degree f");
  }
  if (!irreducible_mod_p(modulus, p)) {
    fail(ErrorKind::InvalidContext, "modulus is not irreducible modulo p");
  }
  return ContextPtr(new PadicContext(p, degree, precision, std::move(modulus)));
}

Integer PadicContext::p_power(int k) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(std::max(k, 0)));
  return r;
}

ContextPtr PadicContext::with_precision(int precision) const {
  if (precision == precision_) return shared_from_this();
  if (precision < 1) fail(ErrorKind::InvalidContext, "precision must be >= 1");
  return ContextPtr(new PadicContext(p_, degree_, precision, modulus_));
}

bool PadicContext::same_ring(const PadicContext& other) const {
  return p_ == other.p_ && degree_ == other.degree_ && modulus_ == other.modulus_;
}

// ---------------------------------------------------------------------------
// PadicElement

PadicElement::PadicElement(ContextPtr ctx)
    : ctx_(std::move(ctx)), coords_(ctx_->degree(), 0) {}

PadicElement::PadicElement(ContextPtr ctx, std::vector<Integer> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  normalize();
}

void PadicElement::normalize() {
  const Integer& m = ctx_->modulus_value();
  for (auto& c : coords_) {
    if (c < 0 || c >= m) c = mod_floor(c, m);
  }
}

PadicElement PadicElement::from_integer(ContextPtr ctx, const Integer& value) {
  std::vector<Integer> coords(ctx->degree(), 0);
  coords[0] = value;
  return PadicElement(std::move(ctx), std::move(coords));
}

PadicElement PadicElement::from_coordinates(ContextPtr ctx,
                                            std::vector<Integer> coords) {
  if (static_cast<int>(coords.size()) != ctx->degree()) {
    fail(ErrorKind::InvalidInput, "expected " + std::to_string(ctx->degree()) +
                                      " coordinates, got " + std::to_string(coords.size()));
  }
  return PadicElement(std::move(ctx), std::move(coords));
}

bool PadicElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool PadicElement::is_unit() const { return valuation() == 0; }

int PadicElement::valuation() const {
  int v = ctx_->precision();
  for (const auto& c : coords_) v = std::min(v, integer_valuation(c, ctx_->p(), v));
  return v;
}

PadicElement PadicElement::operator-() const {
  PadicElement r(*this);
  for (auto& c : r.coords_) {
    if (c != 0) c = ctx_->modulus_value() - c;
  }
  return r;
}

PadicElement& PadicElement::operator+=(const PadicElement& rhs) {
  const Integer& m = ctx_->modulus_value();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += rhs.coords_[i];
    if (coords_[i] >= m) coords_[i] -= m;
  }
  return *this;
}

PadicElement& PadicElement::operator-=(const PadicElement& rhs) {
  const Integer& m = ctx_->modulus_value();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= rhs.coords_[i];
    if (coords_[i] < 0) coords_[i] += m;
  }
  return *this;
}

PadicElement& PadicElement::operator*=(const PadicElement& rhs) {
  const Integer& m = ctx_->modulus_value();
  const int f = ctx_->degree();
  if (f == 1) {
    coords_[0] *= rhs.coords_[0];
    mpz_mod(coords_[0].get_mpz_t(), coords_[0].get_mpz_t(), m.get_mpz_t());
    return *this;
  }
  std::vector<Integer> prod(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < f; ++j) prod[i + j] += coords_[i] * rhs.coords_[j];
  }
  const auto& mod = ctx_->modulus();
  for (int i = 2 * f - 2; i >= f; --i) {
    if (prod[i] == 0) continue;
    for (int j = 0; j < f; ++j) prod[i - f + j] -= prod[i] * mod[j];
  }
  prod.resize(f);
  coords_ = std::move(prod);
  normalize();
  return *this;
}

bool PadicElement::operator==(const PadicElement& rhs) const {
  return coords_ == rhs.coords_;
}

PadicElement PadicElement::pow(const Integer& exponent) const {
  if (exponent < 0) return inverse().pow(Integer(-exponent));
  PadicElement result = from_integer(ctx_, 1);
  PadicElement base = *this;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result *= base;
  }
  return result;
}

PadicElement PadicElement::inverse() const {
  if (!is_unit()) fail(ErrorKind::NonUnit, "cannot invert " + to_string());
  // x^(q-2) inverts modulo p; Newton's iteration y <- y(2 - xy) lifts it.
  auto ctx1 = ctx_->with_precision(1);
  PadicElement y = in_context(ctx1).pow(Integer(ctx_->q() - 2)).in_context(ctx_);
  const PadicElement two = from_integer(ctx_, 2);
  for (int prec = 1; prec < ctx_->precision(); prec *= 2) {
    y = y * (two - (*this) * y);
  }
  return y;
}

PadicElement PadicElement::times_p_power(int k) const {
  PadicElement r(*this);
  const Integer pk = ctx_->p_power(k);
  for (auto& c : r.coords_) c *= pk;
  r.normalize();
  return r;
}

PadicElement PadicElement::divided_by_p_power(int k) const {
  if (k == 0) return *this;
  if (valuation() < k) {
    fail(ErrorKind::PreconditionViolation, "element not divisible by p^" + std::to_string(k));
  }
  PadicElement r(*this);
  const Integer pk = ctx_->p_power(k);
  for (auto& c : r.coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  return r;
}

PadicElement PadicElement::truncated(int k) const {
  PadicElement r(*this);
  if (k >= ctx_->precision()) return r;
  const Integer pk = ctx_->p_power(std::max(k, 0));
  for (auto& c : r.coords_) c = mod_floor(c, pk);
  return r;
}

PadicElement PadicElement::in_context(ContextPtr other) const {
  if (!ctx_->same_ring(*other)) fail(ErrorKind::InvalidInput, "context mismatch");
  return PadicElement(std::move(other), coords_);
}

std::vector<long> PadicElement::residue() const {
  std::vector<long> r;
  r.reserve(coords_.size());
  for (const auto& c : coords_) {
    r.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(ctx_->p()))));
  }
  return r;
}

Integer PadicElement::balanced_coordinate(std::size_t i) const {
  const Integer& m = ctx_->modulus_value();
  if (2 * coords_[i] > m) return coords_[i] - m;
  return coords_[i];
}

std::string PadicElement::to_string() const {
  if (coords_.size() == 1) return coords_[0].get_str();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].get_str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

int valuation(const PadicElement& x) { return x.valuation(); }

PadicElement teichmuller(const PadicElement& x) {
  if (!x.is_unit()) fail(ErrorKind::NonUnit, "Teichmuller lift needs a unit, got " + x.to_string());
  const Integer& q = x.context()->q();
  PadicElement y = x;
  for (int i = 0; i <= x.context()->precision() + 1; ++i) {
    PadicElement next = y.pow(q);
    if (next == y) return y;
    y = std::move(next);
  }
  return y;
}

PadicElement iwasawa_log(const PadicElement& u) {
  if (!u.is_unit()) fail(ErrorKind::NonUnit, "logarithm needs a unit, got " + u.to_string());
  const auto& ctx = u.context();
  const long p = ctx->p();
  const int n = ctx->precision();
  int guard = 1;
  for (Integer bound = 2 * n + 8; ctx->p_power(guard) <= bound;) ++guard;
  auto work = ctx->with_precision(n + guard);

  const PadicElement w = u.in_context(work);
  const PadicElement x = w.pow(Integer(ctx->q() - 1)) - PadicElement::from_integer(work, 1);
  const int vx = x.valuation();
  PadicElement sum(work);
  if (vx >= n + guard) return PadicElement(ctx);

  PadicElement power = x;
  for (long k = 1;; ++k) {
    long m = k;
    int a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    PadicElement term = power.divided_by_p_power(a);
    term *= PadicElement::from_integer(work, m).inverse();
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
    // k*vx - v_p(k) increases with k, so once every remaining term lies in
    // p^N O the series is finished.
    const double floor_log = std::floor(std::log(static_cast<double>(k + 1)) / std::log(static_cast<double>(p)));
    if (static_cast<double>((k + 1) * vx) - floor_log >= n) break;
    power *= x;
  }
  sum *= PadicElement::from_integer(work, Integer(ctx->q() - 1)).inverse();
  return sum.in_context(ctx).truncated(n);
}

PadicElement nth_root(const PadicElement& c, unsigned long e) {
  const auto& ctx = c.context();
  if (e == 0) fail(ErrorKind::InvalidInput, "root exponent must be positive");
  if (e % static_cast<unsigned long>(ctx->p()) == 0) {
    fail(ErrorKind::WildExponent, "p divides the exponent " + std::to_string(e));
  }
  if (e == 1) return c;
  if (c.is_zero()) return c;
  const int v = c.valuation();
  if (v % static_cast<long>(e) != 0) {
    fail(ErrorKind::RamifiedRoot, "valuation " + std::to_string(v) + " not divisible by " + std::to_string(e));
  }
  const PadicElement w = c.divided_by_p_power(v);
  if (ctx->q() > kResidueScanLimit) fail(ErrorKind::SizeLimit, "residue field too large to scan");

  auto ctx1 = ctx->with_precision(1);
  const PadicElement w1 = w.in_context(ctx1);
  const Integer exponent(e);
  std::vector<long> root = scan_residue_field(ctx->p(), ctx->degree(), [&](const std::vector<long>& d) {
    std::vector<Integer> coords(d.begin(), d.end());
    const auto z = PadicElement::from_coordinates(ctx1, coords);
    return z.is_unit() && z.pow(exponent) == w1;
  });
  if (root.empty()) fail(ErrorKind::NoResidueRoot, c.to_string() + " has no " + std::to_string(e) + "-th root mod p");

  PadicElement y = PadicElement::from_coordinates(ctx, std::vector<Integer>(root.begin(), root.end()));
  const PadicElement e_elem = PadicElement::from_integer(ctx, exponent);
  for (int iter = 0; iter < 2 * ctx->precision() + 4; ++iter) {
    const PadicElement diff = y.pow(exponent) - w;
    if (diff.is_zero()) break;
    y -= diff * (e_elem * y.pow(Integer(e - 1))).inverse();
  }
  return y.times_p_power(v / static_cast<int>(e));
}

PadicElement primitive_root_of_unity(const ContextPtr& ctx, unsigned long m) {
  const Integer order = ctx->q() - 1;
  if (m == 0 || order % m != 0) {
    fail(ErrorKind::InvalidInput, std::to_string(m) + " does not divide q-1");
  }
  if (ctx->q() > kResidueScanLimit) fail(ErrorKind::SizeLimit, "residue field too large to scan");
  auto ctx1 = ctx->with_precision(1);
  const auto primes = prime_divisors(order);
  const auto one = PadicElement::from_integer(ctx1, 1);
  std::vector<long> gen = scan_residue_field(ctx->p(), ctx->degree(), [&](const std::vector<long>& d) {
    const auto g = PadicElement::from_coordinates(ctx1, std::vector<Integer>(d.begin(), d.end()));
    if (!g.is_unit()) return false;
    return std::all_of(primes.begin(), primes.end(), [&](const Integer& r) {
      return !(g.pow(Integer(order / r)) == one);
    });
  });
  const auto g = PadicElement::from_coordinates(ctx, std::vector<Integer>(gen.begin(), gen.end()));
  return teichmuller(g).pow(Integer(order / m));
}

bool residue_less(const PadicElement& a, const PadicElement& b) {
  const auto ra = a.residue();
  const auto rb = b.residue();
  if (ra != rb) return ra < rb;
  const auto ca = a.coordinates();
  const auto cb = b.coordinates();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace iwasawa
