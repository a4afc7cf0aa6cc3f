#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxstrata/matrix.hpp"
#include "coxstrata/psi_matrix.hpp"
#include "coxstrata/ratfn.hpp"

namespace coxstrata {

/// Exact product A A' A'': the A'' denominators are cleared with their
/// least common multiple D, the product is divided exactly by D, and the
/// result is validated as a PsiMatrix.
PsiMatrix assemble_psi(const Matrix<PolyU>& a, const Matrix<CycRat>& a_prime, const Matrix<RatFnU>& a_doubleprime,
                       std::string type, int rank, std::vector<ClassMeta> classes, std::vector<IrrInfo> irreps,
                       bool parallel = true);

/// Row-by-row products used by assemble_psi; parallel over rows.
Matrix<PolyU> multiply_rows(const Matrix<PolyU>& a, const Matrix<PolyU>& b, bool parallel);

/// A''(E,E') = sum over F of K(E,E',F) Delta(F) / h with
/// K = (1/|W|) sum over classes of |C| chi_E chi_E' chi_F sgn.
Matrix<RatFnU> a_doubleprime_generic(const Matrix<CycRat>& char_table, const std::vector<std::size_t>& class_sizes,
                                     std::size_t sign_row, const std::vector<PolyU>& deltas, const PolyU& h);

enum class Mode { weyl, noncrystallographic };

struct ClassReport {
  std::size_t row = 0;
  std::vector<std::size_t> x;      // X_C, or 'X_C in noncrystallographic mode
  std::vector<std::size_t> x_max;  // its b-maximal part
  std::size_t sigma = 0;
  PolyU psi;                       // entry at (C, sigma(C))
  int expected_exponent = 0;       // |C| + m(C) - m(1), in powers of v
  bool monomial = false;           // psi == v^{expected_exponent}
};

struct StrataReport {
  Mode mode = Mode::weyl;
  std::vector<std::size_t> irr_star;
  std::vector<std::size_t> irr_star_star;
  std::vector<ClassReport> classes;
  std::vector<std::size_t> image;  // ascending column indices
};

/// Column indices E with some nonzero entry whose leading coefficient is negative.
std::vector<std::size_t> irr_star(const PsiMatrix& psi);

/// Extracts sigma. Raises NonSingletonMax on a b-tie and
/// InvariantViolation when the trivial representation is missing from a
/// class's candidate set or (in Weyl mode) when the doubly excluded set is
/// nonempty.
StrataReport sigma_map(const PsiMatrix& psi, Mode mode);

enum class ImageRelation { equal, strict_subset, other };

struct ImageReport {
  std::vector<std::size_t> image;
  std::vector<std::size_t> candidates;  // Irr - Irr_* - Irr_**
  ImageRelation relation = ImageRelation::other;
};

ImageReport image_report(const PsiMatrix& psi, const StrataReport& report);

}  // namespace coxstrata
