#pragma once

#include <vector>

#include "coxstrata/matrix.hpp"
#include "coxstrata/psi_matrix.hpp"
#include "coxstrata/ratfn.hpp"

namespace coxstrata {

// Irreducibles are ordered 1_0, 2_1, ..., 2_K, then 1', 1'' when p is even,
// then 1_p. Classes are ordered c, c^2, ..., c^{floor(p/2)}, s, t (p even), 1
// with c = st.

std::vector<IrrInfo> dihedral_irreps(int p);
std::vector<ClassMeta> dihedral_classes(int p);
/// Representative word of each class, in class order.
std::vector<Word> dihedral_class_words(int p);

/// Hecke representation matrices (T_s, T_t) of the irreducible at `irr`.
std::pair<Matrix<PolyU>, Matrix<PolyU>> dihedral_hecke_rep(int p, std::size_t irr);

/// (u-1)^{m(w)} tr(T_w, E) at the class representatives.
Matrix<PolyU> dihedral_a(int p);
Matrix<CycRat> dihedral_a_prime(int p);
Matrix<RatFnU> dihedral_a_doubleprime(int p);
/// (u^p - 1)(u^2 - 1).
PolyU dihedral_h(int p);
/// Ordinary character values, irreducibles by classes.
Matrix<CycRat> dihedral_character_table(int p);

Matrix<PolyU> dihedral_aa_closed_form(int p);
Matrix<PolyU> dihedral_psi_closed_form(int p);

/// The product A A' A'' with full validation.
PsiMatrix psi_dihedral(int p, bool parallel = true);

}  // namespace coxstrata
