#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/matrix.hpp"
#include "coxstrata/poly.hpp"

namespace coxstrata {

/// Irreducible representation metadata; b is the b-invariant.
struct IrrInfo {
  std::string label;
  int dim = 1;
  int b = 0;
  int primes = 0;           // tie-break marks, as in 30'_10
  std::string sgn_partner;  // empty when unknown

  /// Parses "d_b" with optional prime marks after d ("30'_10").
  static IrrInfo parse(std::string_view label);
  /// "d_b" form with the prime marks.
  std::string render() const;
  friend bool operator==(const IrrInfo&, const IrrInfo&) = default;
};

/// Row metadata of a class-by-irreducible matrix.
struct ClassMeta {
  std::string label;
  int min_length = 0;
  int m = 0;
  std::size_t size = 0;
  bool is_identity = false;
  friend bool operator==(const ClassMeta&, const ClassMeta&) = default;
};

ClassMeta class_meta(const ConjClass& c);

/// Classes-by-irreducibles matrix over Z[u]. Construction validates that
/// it is square, that every coefficient is an integer, that the sign
/// column is the identity-class indicator and that the identity row lists
/// the dimensions.
class PsiMatrix {
 public:
  PsiMatrix(std::string type, int rank, std::vector<ClassMeta> classes, std::vector<IrrInfo> irreps,
            Matrix<PolyU> entries);

  const std::string& type() const noexcept { return type_; }
  /// Fixed-space dimension of the identity, m(1).
  int rank() const noexcept { return rank_; }
  const std::vector<ClassMeta>& classes() const noexcept { return classes_; }
  const std::vector<IrrInfo>& irreps() const noexcept { return irreps_; }
  const Matrix<PolyU>& entries() const noexcept { return entries_; }
  const PolyU& entry(std::size_t row, std::size_t col) const { return entries_(row, col); }

  std::size_t sign_column() const noexcept { return sign_col_; }
  std::size_t trivial_column() const noexcept { return trivial_col_; }
  std::size_t identity_row() const noexcept { return identity_row_; }
  std::size_t class_index(std::string_view label) const;
  std::size_t irr_index(std::string_view label) const;

 private:
  void validate();

  std::string type_;
  int rank_;
  std::vector<ClassMeta> classes_;
  std::vector<IrrInfo> irreps_;
  Matrix<PolyU> entries_;
  std::size_t sign_col_ = 0;
  std::size_t trivial_col_ = 0;
  std::size_t identity_row_ = 0;
};

/// Entries with every coefficient converted to a plain rational; raises
/// NotRational or NotIntegral when a coefficient is not an integer.
PolyU integral_form(const PolyU& p, std::string_view context);

}  // namespace coxstrata
