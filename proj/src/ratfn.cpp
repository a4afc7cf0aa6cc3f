#include "coxstrata/ratfn.hpp"

namespace coxstrata {

RatFnU::RatFnU(const PolyU& num, const PolyU& den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolyU(CycRat(1));
    return;
  }
  const PolyU g = gcd(num, den);
  num_ = poly_exact_div(num, g);
  den_ = poly_exact_div(den, g);
  const CycRat scale = den_.leading().inverse();
  num_ *= scale;
  den_ *= scale;
}

RatFnU RatFnU::operator-() const {
  RatFnU out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFnU operator+(const RatFnU& a, const RatFnU& b) {
  if (a.den_ == b.den_) return RatFnU(a.num_ + b.num_, a.den_);
  return RatFnU(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFnU operator-(const RatFnU& a, const RatFnU& b) { return a + (-b); }

RatFnU operator*(const RatFnU& a, const RatFnU& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFnU(a.num_ * b.num_, a.den_ * b.den_);
}

RatFnU operator/(const RatFnU& a, const RatFnU& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return RatFnU(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFnU::to_text() const {
  if (is_polynomial()) return coxstrata::to_text(num_);
  return coxstrata::to_text(num_) + " / " + coxstrata::to_text(den_);
}

PolyU lcm(const PolyU& a, const PolyU& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return make_monic(poly_exact_div(a * b, gcd(a, b)));
}

}  // namespace coxstrata
