#include "iwasawa/module.hpp"

#include <algorithm>
#include <functional>

namespace iwasawa {

namespace {

constexpr int kBruteforceDegreeLimit = 64;
constexpr long kBruteforceLevelLimit = 4096;

bool rational_coordinates_only(const IwasawaSeries& f) {
  if (!f.exact()) return false;
  for (const auto& c : f.exact_coordinates()) {
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (c[j] != 0) return false;
    }
  }
  return true;
}

int content_valuation(const exact::ZPoly& z, long p) {
  Integer c = exact::content(z);
  int k = 0;
  while (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

// gcd over K of two distinguished polynomials known modulo p^precision.
// Only a trivial gcd can be certified; everything else is ambiguous.
int certified_gcd_degree(OPoly a, OPoly b, int precision) {
  const auto& base = a.front().context();
  while (true) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.size() == 1) return 0;
    const auto work = base->with_precision(precision);
    for (auto& c : a) c = c.in_context(work);
    for (auto& c : b) c = c.in_context(work);
    OPoly r = poly::remainder_monic(a, b);
    if (poly::is_zero(r)) {
      fail(ErrorKind::PrecisionAmbiguous, "gcd of distinguished parts cannot be certified");
    }
    const int window = static_cast<int>(r.size());
    r.resize(window + 1, PadicElement(work));
    const auto w = weierstrass_prepare(IwasawaSeries::from_coefficients(work, window, r));
    precision -= w.mu;
    if (precision <= 0) {
      fail(ErrorKind::PrecisionAmbiguous, "precision exhausted during gcd");
    }
    a = std::move(b);
    b = w.distinguished;
  }
}

}  // namespace

void validate_structure(const StructureData& data, long p) {
  if (data.free_rank < 0) fail(ErrorKind::InvalidInput, "free rank must be >= 0");
  for (const auto& f : data.factors) {
    if (f.empty() || f.back() != 1) fail(ErrorKind::NotDistinguished, "factor is not monic");
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (!mpz_divisible_ui_p(f[i].get_mpz_t(), static_cast<unsigned long>(p))) {
        fail(ErrorKind::NotDistinguished, "factor has a non-leading unit coefficient");
      }
    }
  }
  for (int mu : data.mus) {
    if (mu <= 0) fail(ErrorKind::InvalidInput, "mu exponents must be positive");
  }
}

IwasawaSeries determinant(const Matrix<IwasawaSeries>& m) {
  if (m.rows() == 0) fail(ErrorKind::InvalidInput, "empty presentation");
  const auto& ref = m(0, 0);
  return determinant(m, IwasawaSeries::from_integers(ref.context(), ref.degree_bound(), {}),
                     IwasawaSeries::one(ref.context(), ref.degree_bound()));
}

IwasawaSeries char_series(const ModulePresentation& pres) {
  if (!pres.matrix.square()) fail(ErrorKind::InvalidInput, "presentation must be square");
  const IwasawaSeries det = determinant(pres.matrix);
  if (det.is_zero()) fail(ErrorKind::NotTorsion, "determinant vanishes at precision");
  return weierstrass_prepare(det).canonical();
}

bool pseudo_null_test(std::span<const IwasawaSeries> minors) {
  if (minors.empty()) fail(ErrorKind::InvalidInput, "no minors given");
  const long p = minors.front().context()->p();

  if (std::all_of(minors.begin(), minors.end(), rational_coordinates_only)) {
    std::vector<exact::ZPoly> polys;
    for (const auto& m : minors) {
      auto z = coordinate_polynomials(m)[0];
      if (!z.empty()) polys.push_back(std::move(z));
    }
    if (polys.empty()) return false;
    int min_mu = content_valuation(polys.front(), p);
    exact::ZPoly g = polys.front();
    for (std::size_t i = 1; i < polys.size(); ++i) {
      min_mu = std::min(min_mu, content_valuation(polys[i], p));
      g = exact::gcd(g, polys[i]);
    }
    g = exact::primitive_part(g);
    // g is primitive, so its distinguished part has degree equal to the
    // index of its first coefficient prime to p.
    const bool unit_constant = !mpz_divisible_ui_p(g[0].get_mpz_t(), static_cast<unsigned long>(p));
    return min_mu == 0 && unit_constant;
  }

  std::vector<WeierstrassData> parts;
  for (const auto& m : minors) {
    if (!m.is_zero()) parts.push_back(weierstrass_prepare(m));
  }
  if (parts.empty()) return false;
  const int min_mu = std::min_element(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
                       return x.mu < y.mu;
                     })->mu;
  if (min_mu > 0) return false;
  const auto smallest = std::min_element(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    return x.lambda() < y.lambda();
  });
  if (smallest->lambda() == 0) return true;
  // A single generator has a certified distinguished degree.
  if (parts.size() == 1) return false;
  for (const auto& other : parts) {
    if (&other == &*smallest) continue;
    const int precision = std::min(smallest->precision, other.precision);
    if (certified_gcd_degree(smallest->distinguished, other.distinguished, precision) == 0) return true;
  }
  fail(ErrorKind::PrecisionAmbiguous, "gcd of distinguished parts cannot be certified");
}

int coinvariant_rank(const StructureData& data, long p, int n) {
  validate_structure(data, p);
  const exact::ZPoly w = exact::omega(p, n);
  Integer pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  long rank = data.free_rank * pn.get_si();
  for (const auto& f : data.factors) rank += exact::gcd_degree(f, w);
  return static_cast<int>(rank);
}

int coinvariant_rank_bruteforce(const StructureData& data, long p, int n) {
  validate_structure(data, p);
  Integer pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  if (pn > kBruteforceLevelLimit) fail(ErrorKind::SizeLimit, "p^n too large for dense elimination");
  const exact::ZPoly w = exact::omega(p, n);
  long rank = data.free_rank * pn.get_si();
  for (const auto& f : data.factors) {
    const int d = exact::degree(f);
    if (d > kBruteforceDegreeLimit) fail(ErrorKind::SizeLimit, "factor degree too large");
    if (d == 0) continue;
    // Column j holds T^j * omega_n reduced modulo f in the basis 1..T^(d-1).
    exact::RationalMatrix m(d, std::vector<exact::Rational>(d, 0));
    exact::ZPoly column = exact::rem_monic(w, f);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) m[i][j] = i < static_cast<int>(column.size()) ? column[i] : 0;
      column.insert(column.begin(), Integer(0));
      column = exact::rem_monic(column, f);
    }
    rank += d - exact::rank(std::move(m));
  }
  return static_cast<int>(rank);
}

QuotientOrder finite_quotient_order(const Matrix<PadicElement>& a) {
  if (!a.square() || a.rows() == 0) fail(ErrorKind::InvalidInput, "matrix must be square and nonempty");
  const auto& ctx = a(0, 0).context();
  const PadicElement det = determinant(a, PadicElement(ctx), PadicElement::from_integer(ctx, 1));
  if (det.is_zero()) return QuotientOrder::infinity();
  return QuotientOrder::finite(det.valuation());
}

ControlReport control_check(const StructureData& data, long p, int e_expected,
                            std::span<const int> levels) {
  ControlReport report;
  report.e_expected = e_expected;
  report.pass = !levels.empty();
  for (int n : levels) {
    ControlRow row;
    row.n = n;
    row.formula_rank = coinvariant_rank(data, p, n);
    row.bruteforce_rank = coinvariant_rank_bruteforce(data, p, n);
    row.pass = row.formula_rank == e_expected && row.bruteforce_rank == e_expected;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

ConstantTermReport constant_term_check(const ModulePresentation& pres) {
  ConstantTermReport report;
  const IwasawaSeries ch = char_series(pres);
  report.char_order = constant_quotient_order(ch);
  const Matrix<PadicElement> at_zero = pres.matrix.map([](const IwasawaSeries& s) { return s[0]; });
  report.quotient_order = finite_quotient_order(at_zero);
  if (report.char_order.infinite && report.quotient_order.infinite) {
    report.status = ConstantTermStatus::TrivialZero;
  } else if (report.char_order == report.quotient_order) {
    report.status = ConstantTermStatus::Pass;
  } else {
    report.status = ConstantTermStatus::Fail;
  }
  return report;
}

ModulePresentation presentation_from_structure(const StructureData& data,
                                               const ContextPtr& ctx, int degree_bound) {
  validate_structure(data, ctx->p());
  if (data.free_rank > 0) fail(ErrorKind::NotTorsion, "free part has positive rank");
  std::vector<IwasawaSeries> diagonal;
  for (const auto& f : data.factors) {
    if (exact::degree(f) > degree_bound) fail(ErrorKind::InsufficientDegree, "factor exceeds truncation degree");
    diagonal.push_back(IwasawaSeries::from_integers(ctx, degree_bound, f));
  }
  for (int mu : data.mus) diagonal.push_back(IwasawaSeries::from_integers(ctx, degree_bound, {ctx->p_power(mu)}));
  if (diagonal.empty()) diagonal.push_back(IwasawaSeries::one(ctx, degree_bound));
  const auto zero = IwasawaSeries::from_integers(ctx, degree_bound, {});
  ModulePresentation pres{Matrix<IwasawaSeries>(diagonal.size(), diagonal.size(), zero)};
  for (std::size_t i = 0; i < diagonal.size(); ++i) pres.matrix(i, i) = diagonal[i];
  return pres;
}

}  // namespace iwasawa
