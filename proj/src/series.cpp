#include "iwasawa/series.hpp"

#include <algorithm>

namespace iwasawa {

namespace {

using Coords = std::vector<Integer>;

Coords coords_add(const Coords& a, const Coords& b, int sign) {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sign > 0 ? Integer(a[i] + b[i]) : Integer(a[i] - b[i]);
  return r;
}

// Product in Z[x]/(modulus) for a monic integer modulus.
Coords coords_mul(const Coords& a, const Coords& b, const std::vector<Integer>& modulus) {
  const std::size_t f = a.size();
  if (f == 1) return {a[0] * b[0]};
  Coords prod(2 * f - 1, 0);
  for (std::size_t i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < f; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = 2 * f - 2; i >= f; --i) {
    if (prod[i] == 0) continue;
    for (std::size_t j = 0; j < f; ++j) prod[i - f + j] -= prod[i] * modulus[j];
  }
  prod.resize(f);
  return prod;
}

bool coords_zero(const Coords& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

int integer_valuation(Integer v, long p) {
  int k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

OPoly to_opoly(const exact::ZPoly& z, const ContextPtr& ctx) {
  OPoly r;
  r.reserve(z.size());
  for (const auto& c : z) r.push_back(PadicElement::from_integer(ctx, c));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// polynomial helpers

namespace poly {

bool is_zero(std::span<const PadicElement> a) {
  return std::all_of(a.begin(), a.end(), [](const PadicElement& x) { return x.is_zero(); });
}

OPoly trimmed(OPoly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

OPoly multiply(const OPoly& a, const OPoly& b) {
  if (a.empty() || b.empty()) return {};
  OPoly r(a.size() + b.size() - 1, PadicElement(a.front().context()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

OPoly remainder_monic(const OPoly& a, std::span<const PadicElement> monic) {
  OPoly r = trimmed(a);
  const std::size_t dm = monic.size() - 1;
  while (r.size() > dm) {
    const PadicElement c = r.back();
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] -= c * monic[j];
    r.pop_back();
    r = trimmed(std::move(r));
  }
  return r;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// IwasawaSeries

IwasawaSeries::IwasawaSeries(ContextPtr ctx, int degree_bound) : ctx_(std::move(ctx)) {
  if (degree_bound < 0) fail(ErrorKind::InvalidInput, "truncation degree must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(degree_bound) + 1, PadicElement(ctx_));
}

IwasawaSeries IwasawaSeries::from_coefficients(ContextPtr ctx, int degree_bound,
                                               std::vector<PadicElement> coeffs) {
  IwasawaSeries s(ctx, degree_bound);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > static_cast<std::size_t>(degree_bound)) {
      if (!coeffs[i].is_zero()) {
        fail(ErrorKind::InvalidInput, "coefficient beyond the truncation degree");
      }
      continue;
    }
    if (!coeffs[i].context()->same_ring(*ctx) ||
        coeffs[i].context()->precision() != ctx->precision()) {
      fail(ErrorKind::InvalidInput, "coefficient context mismatch");
    }
    s.coeffs_[i] = std::move(coeffs[i]);
  }
  return s;
}

IwasawaSeries IwasawaSeries::from_integers(ContextPtr ctx, int degree_bound,
                                           const std::vector<Integer>& coeffs) {
  std::vector<Coords> coords;
  coords.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Coords v(ctx->degree(), 0);
    v[0] = c;
    coords.push_back(std::move(v));
  }
  return from_exact_coordinates(std::move(ctx), degree_bound, std::move(coords));
}

IwasawaSeries IwasawaSeries::from_exact_coordinates(ContextPtr ctx, int degree_bound,
                                                    std::vector<Coords> coords) {
  IwasawaSeries s(ctx, degree_bound);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (static_cast<int>(coords[i].size()) != ctx->degree()) {
      fail(ErrorKind::InvalidInput, "exact coefficient has the wrong number of coordinates");
    }
    if (i > static_cast<std::size_t>(degree_bound)) {
      if (!coords_zero(coords[i])) {
        fail(ErrorKind::InvalidInput, "exact polynomial exceeds the truncation degree");
      }
      continue;
    }
    s.coeffs_[i] = PadicElement::from_coordinates(ctx, coords[i]);
  }
  coords.resize(static_cast<std::size_t>(degree_bound) + 1, Coords(ctx->degree(), 0));
  s.exact_coords_ = std::move(coords);
  return s;
}

IwasawaSeries IwasawaSeries::constant(ContextPtr ctx, int degree_bound, const PadicElement& c) {
  IwasawaSeries s(std::move(ctx), degree_bound);
  s.coeffs_[0] = c;
  return s;
}

IwasawaSeries IwasawaSeries::one(ContextPtr ctx, int degree_bound) {
  return from_integers(std::move(ctx), degree_bound, {Integer(1)});
}

bool IwasawaSeries::is_zero() const { return poly::is_zero(coeffs_); }

int IwasawaSeries::polynomial_degree() const {
  for (int i = degree_bound(); i >= 0; --i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return -1;
}

IwasawaSeries IwasawaSeries::with_degree_bound(int degree_bound) const {
  IwasawaSeries r(ctx_, degree_bound);
  const int keep = std::min(degree_bound, this->degree_bound());
  for (int i = 0; i <= keep; ++i) r.coeffs_[i] = coeffs_[i];
  if (exact()) {
    bool lost = false;
    for (int i = keep + 1; i <= this->degree_bound(); ++i) lost = lost || !coords_zero(exact_coords_[i]);
    if (!lost) {
      r.exact_coords_ = exact_coords_;
      r.exact_coords_.resize(static_cast<std::size_t>(degree_bound) + 1, Coords(ctx_->degree(), 0));
    }
  }
  return r;
}

void IwasawaSeries::check_compatible(const IwasawaSeries& rhs) const {
  if (!(*ctx_ == *rhs.ctx_)) fail(ErrorKind::InvalidInput, "series context mismatch");
  if (degree_bound() != rhs.degree_bound()) {
    fail(ErrorKind::InvalidInput, "series truncation degrees differ");
  }
}

IwasawaSeries IwasawaSeries::operator-() const {
  IwasawaSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  for (auto& v : r.exact_coords_) {
    for (auto& x : v) x = -x;
  }
  return r;
}

IwasawaSeries& IwasawaSeries::operator+=(const IwasawaSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  if (exact() && rhs.exact()) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      exact_coords_[i] = coords_add(exact_coords_[i], rhs.exact_coords_[i], +1);
    }
  } else {
    exact_coords_.clear();
  }
  return *this;
}

IwasawaSeries& IwasawaSeries::operator-=(const IwasawaSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  if (exact() && rhs.exact()) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      exact_coords_[i] = coords_add(exact_coords_[i], rhs.exact_coords_[i], -1);
    }
  } else {
    exact_coords_.clear();
  }
  return *this;
}

IwasawaSeries& IwasawaSeries::operator*=(const IwasawaSeries& rhs) {
  check_compatible(rhs);
  const int d = degree_bound();
  const int da = polynomial_degree();
  const int db = rhs.polynomial_degree();
  std::vector<PadicElement> out(coeffs_.size(), PadicElement(ctx_));
  if (da >= 0 && db >= 0) {
    for (int i = 0; i <= da; ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (int j = 0; j <= std::min(db, d - i); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  if (exact() && rhs.exact()) {
    const auto& modulus = ctx_->modulus();
    std::vector<Coords> prod(coeffs_.size(), Coords(ctx_->degree(), 0));
    bool overflow = false;
    for (int i = 0; i <= d; ++i) {
      if (coords_zero(exact_coords_[i])) continue;
      for (int j = 0; j <= d; ++j) {
        if (coords_zero(rhs.exact_coords_[j])) continue;
        if (i + j > d) {
          overflow = true;
          continue;
        }
        prod[i + j] = coords_add(prod[i + j], coords_mul(exact_coords_[i], rhs.exact_coords_[j], modulus), +1);
      }
    }
    exact_coords_ = overflow ? std::vector<Coords>{} : std::move(prod);
  } else {
    exact_coords_.clear();
  }
  coeffs_ = std::move(out);
  return *this;
}

IwasawaSeries IwasawaSeries::scaled(const PadicElement& c) const {
  IwasawaSeries r(*this);
  for (auto& x : r.coeffs_) x *= c;
  r.exact_coords_.clear();
  return r;
}

IwasawaSeries IwasawaSeries::times_p_power(int k) const {
  IwasawaSeries r(*this);
  for (auto& x : r.coeffs_) x = x.times_p_power(k);
  const Integer pk = ctx_->p_power(k);
  for (auto& v : r.exact_coords_) {
    for (auto& x : v) x *= pk;
  }
  return r;
}

bool IwasawaSeries::operator==(const IwasawaSeries& rhs) const {
  return *ctx_ == *rhs.ctx_ && coeffs_ == rhs.coeffs_;
}

std::vector<exact::ZPoly> coordinate_polynomials(const IwasawaSeries& f) {
  if (!f.exact()) fail(ErrorKind::InvalidInput, "series carries no exact coefficients");
  const int degree = f.context()->degree();
  std::vector<exact::ZPoly> out(degree);
  for (int j = 0; j < degree; ++j) {
    for (const auto& c : f.exact_coordinates()) out[j].push_back(c[j]);
    exact::trim(out[j]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weierstrass preparation and division

bool is_distinguished(std::span<const PadicElement> poly) {
  if (poly.empty()) return false;
  const auto one = PadicElement::from_integer(poly.back().context(), 1);
  if (!(poly.back() == one)) return false;
  return std::all_of(poly.begin(), poly.end() - 1, [](const PadicElement& c) { return c.valuation() >= 1; });
}

IwasawaSeries WeierstrassData::canonical() const {
  const auto& ctx = unit.context();
  std::vector<PadicElement> coeffs;
  for (const auto& c : distinguished) coeffs.push_back(c.times_p_power(mu));
  return IwasawaSeries::from_coefficients(ctx, unit.degree_bound(), std::move(coeffs));
}

IwasawaSeries WeierstrassData::recompose() const { return canonical() * unit; }

WeierstrassData weierstrass_prepare(const IwasawaSeries& f) {
  const auto& ctx = f.context();
  const int n = ctx->precision();
  const int d = f.degree_bound();
  if (f.is_zero()) fail(ErrorKind::ZeroAtPrecision, "series vanishes at precision");

  int mu = n;
  for (const auto& c : f.coefficients()) mu = std::min(mu, c.valuation());
  auto work = ctx->with_precision(n - mu);

  OPoly g;
  g.reserve(d + 1);
  for (const auto& c : f.coefficients()) g.push_back(c.divided_by_p_power(mu).in_context(work));
  int lambda = 0;
  while (lambda <= d && !g[lambda].is_unit()) ++lambda;
  if (lambda >= d) {
    fail(ErrorKind::InsufficientDegree,
         "no unit coefficient below the truncation degree " + std::to_string(d));
  }
  g = poly::trimmed(std::move(g));

  // Hensel-lift the coprime factorisation g = T^lambda * (g / T^lambda) mod p.
  OPoly dist(lambda + 1, PadicElement(work));
  dist[lambda] = PadicElement::from_integer(work, 1);
  OPoly cofactor(g.begin() + lambda, g.end());
  for (int iter = 0; iter <= n - mu + 1; ++iter) {
    OPoly err = g;
    const OPoly prod = poly::multiply(dist, cofactor);
    err.resize(std::max(err.size(), prod.size()), PadicElement(work));
    for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
    if (poly::is_zero(err)) break;

    // inverse of the cofactor modulo T^lambda
    OPoly inv(lambda, PadicElement(work));
    if (lambda > 0) {
      const PadicElement c0_inv = cofactor[0].inverse();
      inv[0] = c0_inv;
      for (int k = 1; k < lambda; ++k) {
        PadicElement acc(work);
        for (int j = 1; j <= k && j < static_cast<int>(cofactor.size()); ++j) acc += cofactor[j] * inv[k - j];
        inv[k] = -(acc * c0_inv);
      }
    }
    OPoly delta_dist(lambda, PadicElement(work));
    for (int i = 0; i < lambda; ++i) {
      for (int j = 0; j <= i; ++j) delta_dist[i] += err[j] * inv[i - j];
    }
    OPoly rest = err;
    const OPoly correction = poly::multiply(cofactor, delta_dist);
    rest.resize(std::max(rest.size(), correction.size()), PadicElement(work));
    for (std::size_t i = 0; i < correction.size(); ++i) rest[i] -= correction[i];
    for (int i = 0; i < lambda; ++i) dist[i] += delta_dist[i];
    for (std::size_t i = lambda; i < rest.size(); ++i) {
      const std::size_t k = i - lambda;
      if (k >= cofactor.size()) cofactor.resize(k + 1, PadicElement(work));
      cofactor[k] += rest[i];
    }
  }

  WeierstrassData out{mu, {}, IwasawaSeries(ctx, d), n - mu};
  for (auto& c : dist) out.distinguished.push_back(c.in_context(ctx));
  std::vector<PadicElement> unit_coeffs;
  for (auto& c : cofactor) unit_coeffs.push_back(c.in_context(ctx));
  out.unit = IwasawaSeries::from_coefficients(ctx, d, std::move(unit_coeffs));
  return out;
}

WeierstrassQuotient weierstrass_divide(const IwasawaSeries& g,
                                       std::span<const PadicElement> distinguished) {
  if (!is_distinguished(distinguished)) fail(ErrorKind::NotDistinguished, "divisor is not distinguished");
  const auto& ctx = g.context();
  const int lambda = static_cast<int>(distinguished.size()) - 1;
  const int d = g.degree_bound();
  if (lambda > d) fail(ErrorKind::InsufficientDegree, "divisor degree exceeds the truncation degree");

  OPoly rem(g.coefficients().begin(), g.coefficients().end());
  OPoly quot(d + 1, PadicElement(ctx));
  for (int top = d; top >= lambda; --top) {
    const PadicElement c = rem[top];
    if (c.is_zero()) continue;
    const int shift = top - lambda;
    quot[shift] = c;
    for (int j = 0; j <= lambda; ++j) rem[shift + j] -= c * distinguished[j];
  }
  rem.resize(lambda, PadicElement(ctx));
  return {IwasawaSeries::from_coefficients(ctx, d, std::move(quot)), std::move(rem)};
}

std::pair<int, int> mu_lambda(const IwasawaSeries& f) {
  const auto w = weierstrass_prepare(f);
  return {w.mu, w.lambda()};
}

IwasawaSeries omega(int n, const ContextPtr& ctx, int degree_bound) {
  if (n < 0) fail(ErrorKind::InvalidInput, "omega index must be >= 0");
  if (ctx->p_power(n) > degree_bound) {
    fail(ErrorKind::InsufficientDegree, "p^n exceeds the truncation degree");
  }
  return IwasawaSeries::from_integers(ctx, degree_bound, exact::omega(ctx->p(), n));
}

PadicElement evaluate(const IwasawaSeries& f, const PadicElement& t) {
  if (t.valuation() < 1) {
    fail(ErrorKind::NotTopologicallyNilpotent, "evaluation point " + t.to_string() + " is a unit");
  }
  PadicElement acc(f.context());
  const auto coeffs = f.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

bool divides(const IwasawaSeries& f, const IwasawaSeries& g, bool invert_p) {
  if (f.is_zero()) fail(ErrorKind::ZeroDivisor, "divisor vanishes at precision");
  if (g.is_zero()) return true;
  const auto wf = weierstrass_prepare(f);
  const auto wg = weierstrass_prepare(g);
  if (!invert_p && wf.mu > wg.mu) return false;
  if (wf.lambda() > wg.lambda()) return false;
  const auto work = f.context()->with_precision(std::min(wf.precision, wg.precision));
  OPoly pf, pg;
  for (const auto& c : wf.distinguished) pf.push_back(c.in_context(work));
  for (const auto& c : wg.distinguished) pg.push_back(c.in_context(work));
  return poly::is_zero(poly::remainder_monic(pg, pf));
}

bool coprime_to_cyclotomic(const IwasawaSeries& f, int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "cyclotomic level must be >= 0");
  if (f.is_zero() && !f.exact()) fail(ErrorKind::ZeroAtPrecision, "series vanishes at precision");
  const long p = f.context()->p();

  if (f.exact()) {
    const auto coords = coordinate_polynomials(f);
    if (std::all_of(coords.begin(), coords.end(), [](const exact::ZPoly& z) { return z.empty(); })) {
      fail(ErrorKind::ZeroAtPrecision, "series is the zero polynomial");
    }
    for (int k = 1; k <= n; ++k) {
      const auto phi = exact::shifted_cyclotomic(p, k);
      if (std::all_of(coords.begin(), coords.end(), [&](const exact::ZPoly& z) {
            return exact::rem_monic(z, phi).empty();
          })) {
        return false;
      }
    }
    return true;
  }

  const auto w = weierstrass_prepare(f);
  const auto work = f.context()->with_precision(w.precision);
  OPoly dist;
  for (const auto& c : w.distinguished) dist.push_back(c.in_context(work));
  for (int k = 1; k <= n; ++k) {
    const auto phi = exact::shifted_cyclotomic(p, k);
    if (exact::degree(phi) > w.lambda()) break;
    const OPoly phi_o = to_opoly(phi, work);
    if (poly::is_zero(poly::remainder_monic(dist, phi_o))) {
      fail(ErrorKind::PrecisionAmbiguous,
           "distinguished part is divisible by Phi_{p^" + std::to_string(k) +
               "}(1+T) at precision; vanishing cannot be certified");
    }
  }
  return true;
}

QuotientOrder constant_quotient_order(const IwasawaSeries& f) {
  if (f.exact()) {
    const auto& c0 = f.exact_coordinates()[0];
    if (coords_zero(c0)) return QuotientOrder::infinity();
    int v = -1;
    for (const auto& x : c0) {
      if (x == 0) continue;
      const int vx = integer_valuation(x, f.context()->p());
      v = v < 0 ? vx : std::min(v, vx);
    }
    return QuotientOrder::finite(v);
  }
  if (f[0].is_zero()) return QuotientOrder::infinity();
  return QuotientOrder::finite(f[0].valuation());
}

int order_of_vanishing_at_zero(const IwasawaSeries& f) {
  if (f.exact()) {
    const auto& coords = f.exact_coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords_zero(coords[i])) return static_cast<int>(i);
    }
  } else {
    for (int i = 0; i <= f.degree_bound(); ++i) {
      if (!f[i].is_zero()) return i;
    }
  }
  fail(ErrorKind::PrecisionAmbiguous, "no coefficient is nonzero at precision");
}

}  // namespace iwasawa
