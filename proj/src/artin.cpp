#include "iwasawa/artin.hpp"

#include <algorithm>
#include <numeric>

namespace iwasawa {

namespace {

constexpr int kOrderSearchLimit = 4096;

Matrix<PadicElement> identity_matrix(const ContextPtr& ctx, std::size_t n) {
  Matrix<PadicElement> m(n, n, PadicElement(ctx));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PadicElement::from_integer(ctx, 1);
  return m;
}

bool matrices_equal(const Matrix<PadicElement>& a, const Matrix<PadicElement>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

void require_square(const Matrix<PadicElement>& m, const char* what) {
  if (!m.square()) fail(ErrorKind::InvalidInput, std::string(what) + " must be square");
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "group has no elements");
  if (table_.size() != n) fail(ErrorKind::InvalidInput, "multiplication table has wrong size");
  for (const auto& row : table_) {
    if (row.size() != n) fail(ErrorKind::InvalidInput, "multiplication table has wrong size");
    for (std::size_t x : row) {
      if (x >= n) fail(ErrorKind::InvalidInput, "multiplication table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          fail(ErrorKind::InvalidInput, "multiplication table is not associative");
        }
      }
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InvalidInput, "multiplication table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) fail(ErrorKind::InvalidInput, "element " + labels_[a] + " has no inverse");
  }
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(ErrorKind::InvalidInput, "unknown group element " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

GroupAlgebraElement group_algebra_multiply(const FiniteGroup& g, const GroupAlgebraElement& a,
                                           const GroupAlgebraElement& b) {
  if (a.size() != g.order() || b.size() != g.order()) fail(ErrorKind::InvalidInput, "group algebra size mismatch");
  GroupAlgebraElement out(g.order(), PadicElement(a.front().context()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.order(); ++j) out[g.multiply(i, j)] += a[i] * b[j];
  }
  return out;
}

GroupAlgebraElement idempotent_coeffs(const CharacterData& chi) {
  const auto& group = chi.group;
  if (chi.values.size() != group.order()) fail(ErrorKind::InvalidInput, "character table row has wrong length");
  const auto& ctx = chi.values.front().context();
  const auto order = static_cast<long>(group.order());
  if (order % ctx->p() == 0) {
    fail(ErrorKind::BadResidueCharacteristic, "p divides the group order " + std::to_string(order));
  }
  if (!(chi.values[group.identity()] == PadicElement::from_integer(ctx, chi.dim))) {
    fail(ErrorKind::InvalidInput, "character value at the identity differs from the dimension");
  }
  const PadicElement scale = PadicElement::from_integer(ctx, chi.dim) * PadicElement::from_integer(ctx, order).inverse();
  GroupAlgebraElement out;
  out.reserve(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) out.push_back(scale * chi.values[group.inverse(i)]);
  return out;
}

QuotientOrder isotypic_component(const FiniteModule& module, const CharacterData& chi) {
  if (module.rank < 0 || module.exponent < 0) fail(ErrorKind::InvalidInput, "module shape must be nonnegative");
  if (module.rank == 0 || module.exponent == 0) return QuotientOrder::finite(0);
  if (module.action.size() != chi.group.order()) fail(ErrorKind::InvalidInput, "one action matrix per group element");
  const auto coeffs = idempotent_coeffs(chi);
  const auto& base = coeffs.front().context();
  if (module.exponent > base->precision()) {
    fail(ErrorKind::InvalidInput, "module exponent exceeds the working precision");
  }
  const auto ctx = base->with_precision(module.exponent);
  const auto n = static_cast<std::size_t>(module.rank);
  Matrix<PadicElement> e(n, n, PadicElement(ctx));
  for (std::size_t g = 0; g < coeffs.size(); ++g) {
    const auto& act = module.action[g];
    if (act.rows() != n || act.cols() != n) fail(ErrorKind::InvalidInput, "action matrix has wrong size");
    const PadicElement c = coeffs[g].in_context(ctx);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) e(i, j) += c * act(i, j).in_context(ctx);
    }
  }
  if (!matrices_equal(multiply(e, e, PadicElement(ctx)), e)) {
    fail(ErrorKind::NotProjector, "assembled idempotent is not a projector on the module");
  }
  // Image of a matrix with elementary divisors p^v_i is sum O/p^(k - v_i).
  long exponent = 0;
  for (int v : elementary_divisor_valuations(e)) exponent += module.exponent - v;
  return QuotientOrder::finite(exponent);
}

int trivial_zero_count(const Matrix<PadicElement>& frob) {
  require_square(frob, "Frobenius matrix");
  const std::size_t d = frob.rows();
  if (d == 0) return 0;
  const auto& ctx = frob(0, 0).context();
  const auto id = identity_matrix(ctx, d);
  const long p = ctx->p();

  // A finite-order F with F^m = 1 modulo p^N has F^m = 1 exactly (the
  // reduction kernel of GL_d(O) is torsion-free for odd p), so the
  // averaging projector is exact and its trace is the kernel dimension.
  Matrix<PadicElement> power = frob;
  Matrix<PadicElement> sum = id;
  int order = 0;
  for (int m = 1; m <= kOrderSearchLimit; ++m) {
    if (matrices_equal(power, id)) {
      order = m;
      break;
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) sum(i, j) += power(i, j);
    }
    power = multiply(power, frob, PadicElement(ctx));
  }
  if (order > 0 && order % p != 0) {
    PadicElement trace(ctx);
    for (std::size_t i = 0; i < d; ++i) trace += sum(i, i);
    trace *= PadicElement::from_integer(ctx, order).inverse();
    for (std::size_t k = 0; k <= d; ++k) {
      if (trace == PadicElement::from_integer(ctx, static_cast<long>(k))) return static_cast<int>(k);
    }
    fail(ErrorKind::PrecisionAmbiguous, "projector trace is not an integer at precision");
  }

  Matrix<PadicElement> diff = frob;
  for (std::size_t i = 0; i < d; ++i) diff(i, i) -= id(i, i);
  const auto vals = elementary_divisor_valuations(diff);
  if (std::any_of(vals.begin(), vals.end(), [&](int v) { return v >= ctx->precision(); })) {
    fail(ErrorKind::PrecisionAmbiguous, "F - 1 has an elementary divisor vanishing at precision");
  }
  return 0;
}

int trivial_zero_count(const exact::RationalMatrix& frob) {
  const std::size_t d = frob.size();
  exact::RationalMatrix diff = frob;
  for (std::size_t i = 0; i < d; ++i) {
    if (diff[i].size() != d) fail(ErrorKind::InvalidInput, "Frobenius matrix must be square");
    diff[i][i] -= 1;
  }
  return static_cast<int>(d) - exact::rank(std::move(diff));
}

RegulatorReport regulator(const Matrix<PadicElement>& s_plus) {
  require_square(s_plus, "S+");
  if (s_plus.rows() == 0) fail(ErrorKind::InvalidInput, "S+ is empty");
  const auto& ctx = s_plus(0, 0).context();
  if (ctx->precision() < 2) fail(ErrorKind::InvalidContext, "regulator needs precision >= 2");
  const auto work = ctx->with_precision(ctx->precision() - 1);
  const auto scaled = s_plus.map([&](const PadicElement& s) {
    if (s.valuation() < 1) fail(ErrorKind::EntryNotDivisible, "entry " + s.to_string() + " is a unit");
    return s.divided_by_p_power(1).in_context(work);
  });
  const PadicElement det = determinant(scaled, PadicElement(work), PadicElement::from_integer(work, 1));
  RegulatorReport report{det, std::nullopt, work->precision()};
  if (!det.is_zero()) report.valuation = det.valuation();
  return report;
}

QuotientOrder sel_sharp_order(const Matrix<PadicElement>& s_plus) {
  const auto reg = regulator(s_plus);
  return reg.valuation ? QuotientOrder::finite(*reg.valuation) : QuotientOrder::infinity();
}

ConstantTermPrediction predicted_constant_term(const StabilizationData& stab) {
  if (stab.d < 1 || stab.d_plus < 1 || stab.d_plus > stab.d) {
    fail(ErrorKind::InvalidInput, "need 1 <= d_plus <= d");
  }
  const auto d_minus = static_cast<std::size_t>(stab.d - stab.d_plus);
  if (stab.frob_minus.rows() != d_minus || stab.frob_minus.cols() != d_minus) {
    fail(ErrorKind::InvalidInput, "Frobenius matrix must have size d - d_plus");
  }
  const auto d_plus = static_cast<std::size_t>(stab.d_plus);
  if (stab.s_plus.rows() != d_plus || stab.s_plus.cols() != d_plus) {
    fail(ErrorKind::InvalidInput, "S+ must have size d_plus");
  }
  if (stab.class_order.infinite) fail(ErrorKind::InvalidInput, "class group order must be finite");
  if (stab.class_order.q_exponent % stab.d != 0) {
    fail(ErrorKind::NotPerfectPower, "class group order is not a " + std::to_string(stab.d) + "-th power");
  }

  ConstantTermPrediction out;
  out.trivial_zero_count = trivial_zero_count(stab.frob_minus);
  out.class_root_exponent = stab.class_order.q_exponent / stab.d;
  if (out.trivial_zero_count > 0) return out;

  const auto reg = regulator(stab.s_plus);
  if (!reg.valuation) {
    fail(ErrorKind::PrecisionAmbiguous, "regulator vanishes at precision");
  }
  out.regulator_valuation = *reg.valuation;
  out.sel_sharp = sel_sharp_order(stab.s_plus);
  out.valuation = out.regulator_valuation + out.class_root_exponent;
  return out;
}

HeckeRoots hecke_roots(const PadicElement& a_p, const PadicElement& eps_p) {
  const auto& ctx = a_p.context();
  if (!(*ctx == *eps_p.context())) fail(ErrorKind::InvalidContext, "a_p and eps(p) from different rings");
  const int n = ctx->precision();
  const PadicElement disc = a_p * a_p - PadicElement::from_integer(ctx, 4) * eps_p;
  if (disc.is_zero()) fail(ErrorKind::IrregularAtPrecision, "double root at precision");

  HeckeRoots out;
  PadicElement s(ctx);
  try {
    s = nth_root(disc, 2);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NoResidueRoot) throw;
    out.kind = RootKind::Inert;
    if (a_p.is_zero()) out.alpha_squared = -eps_p;
    out.precision = n;
    return out;
  }
  // s is determined modulo p^(N - v(disc)/2).
  out.precision = n - disc.valuation() / 2;
  const PadicElement half = PadicElement::from_integer(ctx, 2).inverse();
  PadicElement alpha = (a_p + s) * half;
  PadicElement beta = (a_p - s) * half;
  if (residue_less(beta, alpha)) std::swap(alpha, beta);
  out.regular = !(alpha == beta);
  out.alpha = alpha;
  out.beta = beta;
  return out;
}

}  // namespace iwasawa
