#pragma once

#include <cstddef>
#include <vector>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/poly.hpp"

namespace coxstrata {

class PsiMatrix;

/// Sum over y of coefficient(y) T_y, stored densely over the group
/// (zero polynomials mark elements outside the support).
struct TVector {
  std::vector<PolyZ> coeffs;

  const PolyZ& at(Element y) const { return coeffs[y]; }
  std::size_t support_size() const;
};

/// Expansion of (-u)^{|w|} T_{w^-1}^{-1} in the T-basis, parallel over the
/// group at each step of the recurrence.
TVector e_vector(const CoxGroup& g, Element w);
/// Single-threaded reference implementation of e_vector.
TVector e_vector_serial(const CoxGroup& g, Element w);
/// Same expansion along the given reduced word (letters applied from the
/// right end). The word must be reduced.
TVector e_vector_from_word(const CoxGroup& g, const Word& word, bool parallel = true);

/// The trivial-representation column entry for a class: the identity
/// coefficient of the e-vector of the stored representative, divided
/// exactly by (u-1)^{m(1)-m(C)}.
PolyU psi_trivial_column(const CoxGroup& g, const ConjClass& c);

/// True iff the sign column of psi is 1 on the identity class and 0 on
/// the class at row `row` otherwise.
bool sgn_column_check(const PsiMatrix& psi, std::size_t row);

}  // namespace coxstrata
