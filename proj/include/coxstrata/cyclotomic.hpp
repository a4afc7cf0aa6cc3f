#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxstrata/rational.hpp"

namespace coxstrata {

int euler_phi(int n);

/// Ascending integer coefficients of the n-th cyclotomic polynomial.
/// Results are cached; the returned reference stays valid for the
/// lifetime of the program.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_N), stored as its residue modulo Phi_N in the
/// power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Rational values combine with any conductor; two non-rational operands
/// must share the conductor.
class CycRat {
 public:
  CycRat() = default;
  CycRat(long value) : CycRat(Rational(value)) {}  // NOLINT: implicit embedding
  CycRat(const Rational& value);                   // NOLINT: implicit embedding

  static CycRat rational(const Rational& value, int conductor);
  /// zeta_N^k for any integer k.
  static CycRat zeta(int conductor, long k = 1);
  /// Reduces an arbitrary coefficient vector in powers of zeta_N.
  static CycRat from_powers(int conductor, std::vector<Rational> powers);

  int conductor() const noexcept { return conductor_; }
  /// Full residue vector, length phi(conductor).
  std::vector<Rational> coefficients() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept { return coeffs_.size() <= 1; }
  std::optional<Rational> rational_value() const;

  /// Complex conjugation zeta -> zeta^-1.
  CycRat conj() const;
  CycRat inverse() const;

  CycRat operator-() const;
  CycRat& operator+=(const CycRat& rhs);
  CycRat& operator-=(const CycRat& rhs);
  CycRat& operator*=(const CycRat& rhs);
  CycRat& operator/=(const CycRat& rhs) { return *this *= rhs.inverse(); }

  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
  friend CycRat operator/(CycRat a, const CycRat& b) { return a /= b; }
  friend bool operator==(const CycRat& a, const CycRat& b);

  /// "3/2" for rationals, "cyc(N):c0;c1;..." otherwise.
  std::string to_text() const;

 private:
  CycRat(int conductor, std::vector<Rational> trimmed);
  int merged_conductor(const CycRat& rhs) const;
  void trim();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;  // no trailing zeros
};

inline bool is_zero(const CycRat& x) { return x.is_zero(); }

/// The rational value of a, or NotRational carrying its residue.
Rational cyc_to_rational(const CycRat& a);

/// Parses "3/2", "cyc(N):c0;c1;..." or "cyc(N): c0,c1,...".
CycRat parse_cyc(std::string_view text);

}  // namespace coxstrata
