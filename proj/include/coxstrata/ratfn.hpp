#pragma once

#include <string>

#include "coxstrata/poly.hpp"

namespace coxstrata {

/// Quotient of two polynomials in u, kept gcd-reduced with a monic
/// denominator (so its leading coefficient is the positive rational 1).
class RatFnU {
 public:
  RatFnU() : den_(PolyU(CycRat(1))) {}
  RatFnU(const PolyU& p) : num_(p), den_(PolyU(CycRat(1))) {}  // NOLINT: polynomial embedding
  RatFnU(long c) : RatFnU(PolyU(c)) {}                          // NOLINT
  RatFnU(const PolyU& num, const PolyU& den);

  const PolyU& numerator() const noexcept { return num_; }
  const PolyU& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return !den_.degree().value_or(0); }

  RatFnU operator-() const;
  friend RatFnU operator+(const RatFnU& a, const RatFnU& b);
  friend RatFnU operator-(const RatFnU& a, const RatFnU& b);
  friend RatFnU operator*(const RatFnU& a, const RatFnU& b);
  friend RatFnU operator/(const RatFnU& a, const RatFnU& b);
  RatFnU& operator+=(const RatFnU& b) { return *this = *this + b; }
  RatFnU& operator*=(const RatFnU& b) { return *this = *this * b; }
  friend bool operator==(const RatFnU& a, const RatFnU& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "num / den" in the coefficient text form.
  std::string to_text() const;

 private:
  PolyU num_;
  PolyU den_;
};

inline bool is_zero(const RatFnU& r) { return r.is_zero(); }

/// Least common multiple (monic) of polynomial denominators.
PolyU lcm(const PolyU& a, const PolyU& b);

}  // namespace coxstrata
