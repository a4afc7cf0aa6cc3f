#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxstrata {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational fraction(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a", "-a", "a/b" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

std::string_view trim(std::string_view text);

}  // namespace coxstrata
