#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwasawa/exact.hpp"
#include "iwasawa/matrix.hpp"
#include "iwasawa/padic.hpp"
#include "iwasawa/quotient_order.hpp"

namespace iwasawa {

/// Finite group given by its multiplication table: table[i][j] is the
/// index of g_i * g_j.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, associativity, identity and inverses.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Element of O/p^N[G], one coefficient per group element.
using GroupAlgebraElement = std::vector<PadicElement>;

GroupAlgebraElement group_algebra_multiply(const FiniteGroup& g, const GroupAlgebraElement& a,
                                           const GroupAlgebraElement& b);

struct CharacterData {
  FiniteGroup group;
  std::vector<PadicElement> values;  // trace of g_i, indexed like group labels
  int dim = 1;
};

/// Coefficients (dim/#G) chi(g^-1) of the central idempotent.
/// Throws BadResidueCharacteristic when p divides #G.
GroupAlgebraElement idempotent_coeffs(const CharacterData& chi);

/// (O/p^k)^rank with G acting through action[i] for group element i.
struct FiniteModule {
  int exponent = 0;
  int rank = 0;
  std::vector<Matrix<PadicElement>> action;
};

/// Order of e_chi M. Throws NotProjector when e_chi fails e^2 = e on M.
QuotientOrder isotypic_component(const FiniteModule& module, const CharacterData& chi);

/// dim ker(F - 1) over the fraction field for a finite-order F.
int trivial_zero_count(const Matrix<PadicElement>& frob_minus);
int trivial_zero_count(const exact::RationalMatrix& frob_minus);

struct RegulatorReport {
  PadicElement value;             // det(S/p), meaningful modulo p^precision
  std::optional<int> valuation;   // empty when the value vanishes at precision
  int precision = 0;
};

/// det(S/p). Throws EntryNotDivisible when an entry is a unit.
RegulatorReport regulator(const Matrix<PadicElement>& s_plus);

/// #(O^d / p^-1 S O^d) = q^v(det S - d).
QuotientOrder sel_sharp_order(const Matrix<PadicElement>& s_plus);

struct StabilizationData {
  int d = 1;
  int d_plus = 1;
  Matrix<PadicElement> frob_minus;  // (d - d_plus) square
  Matrix<PadicElement> s_plus;      // d_plus square, entries in pO
  QuotientOrder class_order;        // order of the rho-part of the class group
};

struct ConstantTermPrediction {
  int trivial_zero_count = 0;
  /// v(L(0)); empty for a trivial zero.
  std::optional<long> valuation;
  long regulator_valuation = 0;
  long class_root_exponent = 0;  // log_q of the d-th root of the class order
  QuotientOrder sel_sharp;
};

/// Throws NotPerfectPower when the class order is not a d-th power, and
/// PrecisionAmbiguous when the regulator vanishes at precision without a
/// trivial zero.
ConstantTermPrediction predicted_constant_term(const StabilizationData& stab);

enum class RootKind { Split, Inert };

struct HeckeRoots {
  RootKind kind = RootKind::Split;
  std::optional<PadicElement> alpha;
  std::optional<PadicElement> beta;
  /// -eps(p), reported for inert roots with a_p = 0.
  std::optional<PadicElement> alpha_squared;
  bool regular = true;
  int precision = 0;
};

/// Roots of X^2 - a_p X + eps(p). Throws IrregularAtPrecision on a double
/// root and RamifiedRoot when the discriminant has odd valuation.
HeckeRoots hecke_roots(const PadicElement& a_p, const PadicElement& eps_p);

}  // namespace iwasawa
