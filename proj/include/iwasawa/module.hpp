#pragma once

#include <span>
#include <vector>

#include "iwasawa/exact.hpp"
#include "iwasawa/matrix.hpp"
#include "iwasawa/quotient_order.hpp"
#include "iwasawa/series.hpp"

namespace iwasawa {

/// Square presentation: the module is Lambda^a modulo the column span.
struct ModulePresentation {
  Matrix<IwasawaSeries> matrix;

  std::size_t size() const { return matrix.rows(); }
};

/// Lambda^r + sum Lambda/(P_i) + sum Lambda/(p^mu_j).
struct StructureData {
  int free_rank = 0;
  std::vector<exact::ZPoly> factors;  // distinguished, integer coefficients
  std::vector<int> mus;               // each > 0
};

IwasawaSeries determinant(const Matrix<IwasawaSeries>& m);

/// Canonical representative p^mu * P of det(matrix). Throws NotTorsion.
IwasawaSeries char_series(const ModulePresentation& pres);

/// Finiteness test from the maximal minors of a presentation.
bool pseudo_null_test(std::span<const IwasawaSeries> minors);

/// r p^n + sum_i deg gcd(P_i, omega_n), via exact subresultant gcds.
int coinvariant_rank(const StructureData& data, long p, int n);

/// Same quantity from the rank of multiplication by omega_n on each
/// Q[T]/(P_i), by exact rational elimination.
int coinvariant_rank_bruteforce(const StructureData& data, long p, int n);

/// q^v(det A), INFINITE when det A vanishes at precision.
QuotientOrder finite_quotient_order(const Matrix<PadicElement>& a);

struct ControlRow {
  int n = 0;
  int formula_rank = 0;
  int bruteforce_rank = 0;
  bool pass = false;
};

struct ControlReport {
  int e_expected = 0;
  std::vector<ControlRow> rows;
  bool pass = false;
};

ControlReport control_check(const StructureData& data, long p, int e_expected,
                            std::span<const int> levels);

enum class ConstantTermStatus { Pass, Fail, TrivialZero };

struct ConstantTermReport {
  ConstantTermStatus status = ConstantTermStatus::Fail;
  QuotientOrder char_order;      // from the characteristic series at T = 0
  QuotientOrder quotient_order;  // #(M/TM) from the presentation at T = 0
};

ConstantTermReport constant_term_check(const ModulePresentation& pres);

/// Diagonal presentation of a torsion StructureData. Throws NotTorsion when
/// the free rank is positive.
ModulePresentation presentation_from_structure(const StructureData& data,
                                               const ContextPtr& ctx, int degree_bound);

void validate_structure(const StructureData& data, long p);

}  // namespace iwasawa
