#include "iwasawa/bivariate.hpp"

#include <algorithm>

namespace iwasawa {

BivariateSeries::BivariateSeries(ContextPtr ctx, int y_degree, int t_degree)
    : ctx_(std::move(ctx)), dy_(y_degree), dt_(t_degree) {
  if (dy_ < 0 || dt_ < 0) fail(ErrorKind::InvalidInput, "truncation degrees must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(dy_ + 1) * static_cast<std::size_t>(dt_ + 1), PadicElement(ctx_));
}

BivariateSeries BivariateSeries::from_rows(ContextPtr ctx, int y_degree, int t_degree,
                                           const std::vector<std::vector<PadicElement>>& rows) {
  BivariateSeries out(ctx, y_degree, t_degree);
  if (static_cast<int>(rows.size()) > y_degree + 1) {
    fail(ErrorKind::InvalidInput, "more Y-rows than the truncation allows");
  }
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (static_cast<int>(rows[j].size()) > t_degree + 1) {
      fail(ErrorKind::InvalidInput, "row longer than the T truncation allows");
    }
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      if (!rows[j][i].context()->same_ring(*ctx)) fail(ErrorKind::InvalidContext, "coefficient from another ring");
      out(static_cast<int>(j), static_cast<int>(i)) = rows[j][i].in_context(ctx);
    }
  }
  return out;
}

BivariateSeries BivariateSeries::one(ContextPtr ctx, int y_degree, int t_degree) {
  BivariateSeries out(ctx, y_degree, t_degree);
  out(0, 0) = PadicElement::from_integer(ctx, 1);
  return out;
}

BivariateSeries BivariateSeries::from_series(const IwasawaSeries& s, int y_degree) {
  BivariateSeries out(s.context(), y_degree, s.degree_bound());
  for (int i = 0; i <= s.degree_bound(); ++i) out(0, i) = s[i];
  return out;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicElement& c) { return c.is_zero(); });
}

void BivariateSeries::check_compatible(const BivariateSeries& rhs) const {
  if (!(*ctx_ == *rhs.ctx_)) fail(ErrorKind::InvalidContext, "bivariate series over different rings");
  if (dy_ != rhs.dy_ || dt_ != rhs.dt_) fail(ErrorKind::InvalidInput, "truncation degrees differ");
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const BivariateSeries& rhs) {
  check_compatible(rhs);
  BivariateSeries out(ctx_, dy_, dt_);
  for (int j1 = 0; j1 <= dy_; ++j1) {
    for (int i1 = 0; i1 <= dt_; ++i1) {
      const PadicElement& a = (*this)(j1, i1);
      if (a.is_zero()) continue;
      for (int j2 = 0; j1 + j2 <= dy_; ++j2) {
        for (int i2 = 0; i1 + i2 <= dt_; ++i2) out(j1 + j2, i1 + i2) += a * rhs(j2, i2);
      }
    }
  }
  return *this = std::move(out);
}

bool BivariateSeries::operator==(const BivariateSeries& rhs) const {
  return *ctx_ == *rhs.ctx_ && dy_ == rhs.dy_ && dt_ == rhs.dt_ && coeffs_ == rhs.coeffs_;
}

IwasawaSeries specialize_Y(const BivariateSeries& f, const PadicElement& y) {
  const auto& ctx = f.context();
  const int v = y.valuation();
  if (v < 1) fail(ErrorKind::NotTopologicallyNilpotent, "specialization point " + y.to_string() + " is a unit");
  // The dropped tail sum_{j > DY} is divisible by y^(DY+1).
  const long tail = static_cast<long>(f.y_degree() + 1) * v;
  const auto out_ctx = ctx->with_precision(static_cast<int>(std::min<long>(ctx->precision(), tail)));
  const auto yy = y.in_context(ctx);
  std::vector<PadicElement> coeffs;
  for (int i = 0; i <= f.t_degree(); ++i) {
    PadicElement acc(ctx);
    for (int j = f.y_degree(); j >= 0; --j) acc = acc * yy + f(j, i);
    coeffs.push_back(acc.in_context(out_ctx));
  }
  return IwasawaSeries::from_coefficients(out_ctx, f.t_degree(), std::move(coeffs));
}

BivariateSeries determinant(const Matrix<BivariateSeries>& m) {
  if (m.rows() == 0) fail(ErrorKind::InvalidInput, "empty presentation");
  const auto& ref = m(0, 0);
  return determinant(m, BivariateSeries(ref.context(), ref.y_degree(), ref.t_degree()),
                     BivariateSeries::one(ref.context(), ref.y_degree(), ref.t_degree()));
}

WeightGrid weight_grid(const ContextPtr& ctx, int r, unsigned long e, int n_max) {
  if (r < 0 || n_max < 0) fail(ErrorKind::InvalidInput, "r and n_max must be >= 0");
  if (e == 0) fail(ErrorKind::InvalidInput, "e must be positive");
  const long p = ctx->p();
  const Integer pp(p);
  const long re = static_cast<long>(r) * static_cast<long>(e);
  const Integer p_re = ctx->p_power(static_cast<int>(re));
  const Integer mod = ctx->modulus_value() * p_re;
  const Integer u = pp + 1;

  WeightGrid grid{r, e, {}};
  for (int n = 0; n <= n_max; ++n) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(n + re));
    const Integer k = (pp - 1) * pk + 1;
    Integer power;
    const Integer exponent = k - 1;
    mpz_powm(power.get_mpz_t(), u.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
    Integer numer = power - 1;
    if (numer < 0) numer += mod;
    // u^(k-1) - 1 has valuation n + re + 1, so the quotient is integral.
    mpz_divexact(numer.get_mpz_t(), numer.get_mpz_t(), p_re.get_mpz_t());
    const auto c = PadicElement::from_integer(ctx, numer);
    grid.entries.push_back({n, k, e == 1 ? c : nth_root(c, e)});
  }
  return grid;
}

SpecializationReport char_specialization_check(const Matrix<BivariateSeries>& pres,
                                               const PadicElement& y) {
  if (!pres.square() || pres.rows() == 0) fail(ErrorKind::InvalidInput, "presentation must be square and nonempty");
  const IwasawaSeries lhs = specialize_Y(determinant(pres), y);
  const auto& ctx = lhs.context();
  const auto entries = pres.map([&](const BivariateSeries& f) { return specialize_Y(f, y); });
  const IwasawaSeries rhs =
      determinant(entries, IwasawaSeries(ctx, lhs.degree_bound()), IwasawaSeries::one(ctx, lhs.degree_bound()));
  if (rhs.is_zero()) {
    fail(ErrorKind::NotTorsionAfterSpecialization, "specialized determinant vanishes at precision");
  }
  SpecializationReport report{false, weierstrass_prepare(lhs).canonical(), weierstrass_prepare(rhs).canonical()};
  report.pass = report.specialized_char == report.char_of_specialized;
  return report;
}

LimitDivisibilityReport limit_divisibility_check(std::span<const IwasawaSeries> a_seq,
                                                 std::span<const IwasawaSeries> b_seq,
                                                 const IwasawaSeries& a_lim,
                                                 const IwasawaSeries& b_lim, int k_max) {
  if (a_seq.size() != b_seq.size()) fail(ErrorKind::InvalidInput, "sequences differ in length");
  if (k_max < 0) fail(ErrorKind::InvalidInput, "K_max must be >= 0");
  if (a_lim.is_zero()) fail(ErrorKind::PreconditionViolation, "limit divisor vanishes at precision");
  for (std::size_t n = 0; n < a_seq.size(); ++n) {
    if (!divides(a_seq[n], b_seq[n], true)) {
      fail(ErrorKind::PreconditionViolation,
           "term " + std::to_string(n) + " is not divisible after inverting p");
    }
  }
  for (int k = 0; k <= k_max; ++k) {
    bool all = true;
    for (std::size_t n = 0; n < a_seq.size() && all; ++n) {
      all = divides(a_seq[n], b_seq[n].times_p_power(k), false);
    }
    if (!all) continue;
    const bool limit = divides(a_lim, b_lim.times_p_power(k), false);
    return {k, limit ? LimitStatus::Pass : LimitStatus::Fail};
  }
  fail(ErrorKind::BoundExceeded, "no K <= " + std::to_string(k_max) + " clears the denominators");
}

}  // namespace iwasawa
