#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxstrata/cyclotomic.hpp"
#include "coxstrata/errors.hpp"
#include "coxstrata/rational.hpp"

namespace coxstrata {

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

/// Dense univariate polynomial with coefficients in ascending powers of the
/// variable. Canonical form has no trailing zero coefficient; the zero
/// polynomial is the empty sequence and has no degree.
template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  Poly(const R& constant) {  // NOLINT: implicit constant embedding
    if (!coxstrata::is_zero(constant)) coeffs_.push_back(constant);
  }
  Poly(long constant) : Poly(R(constant)) {}  // NOLINT
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& c, std::size_t power) {
    if (coxstrata::is_zero(c)) return {};
    std::vector<R> coeffs(power + 1);
    coeffs[power] = c;
    return Poly(std::move(coeffs));
  }
  /// The variable itself.
  static Poly variable() { return monomial(R(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  R coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(); }
  const R& leading() const { return coeffs_.back(); }

  Poly operator-() const {
    Poly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  Poly& operator*=(const R& scalar) {
    if (coxstrata::is_zero(scalar)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (coxstrata::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (coxstrata::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
  }

  Poly pow(unsigned e) const {
    Poly out(R(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coxstrata::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using PolyU = Poly<CycRat>;   ///< polynomial in u = v^2 over Q(zeta_N)
using PolyZ = Poly<Integer>;  ///< integer polynomial in u = v^2

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

namespace detail {
inline std::optional<Integer> divide_coefficient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::optional<CycRat> divide_coefficient(const CycRat& a, const CycRat& b) { return a / b; }
}  // namespace detail

/// Quotient and remainder of a by b (b nonzero). For integer coefficients
/// the division must be exact at every step or InexactDivision is raised.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<R> rem = a.coefficients();
  const auto& div = b.coefficients();
  const std::size_t db = div.size() - 1;
  if (rem.size() <= db) return {Poly<R>(), a};
  std::vector<R> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    auto c = detail::divide_coefficient(rem[i], div.back());
    if (!c) throw InexactDivision("coefficient not divisible by leading coefficient");
    quot[i - db] = *c;
    for (std::size_t j = 0; j <= db; ++j)
      if (!is_zero(div[j])) rem[i - db + j] -= *c * div[j];
  }
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

/// q with a = q * b exactly; InexactDivision otherwise.
template <class R>
Poly<R> poly_exact_div(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InexactDivision("polynomial remainder is nonzero");
  return q;
}

/// Monic greatest common divisor over a field coefficient ring.
PolyU gcd(PolyU a, PolyU b);
PolyU make_monic(const PolyU& p);

PolyU to_poly_u(const PolyZ& p);

/// Comma-separated coefficients ascending in u ("1,0,1" = 1 + u^2); the
/// zero polynomial renders as "0". Non-rational coefficients use the
/// "cyc(N):c0;c1;..." token.
std::string to_text(const PolyU& p);
std::string to_text(const PolyZ& p);
PolyU parse_poly(std::string_view text);

/// Human-readable rendering in powers of v, e.g. "v^14+v^10".
std::string to_v_string(const PolyU& p);

struct LeadingInfo {
  Rational leading;       ///< coefficient of the highest power of v
  std::size_t v_degree;   ///< always even
  Rational constant;
};

/// Leading coefficient, v-degree and constant term; coefficients must be
/// rational. Raises Error on the zero polynomial.
LeadingInfo leading_and_constant(const PolyU& p);

/// Every coefficient rational and integral; raises NotRational/NotIntegral.
void require_integer_coefficients(const PolyU& p, std::string_view context);

bool has_negative_coefficient(const PolyU& p);

}  // namespace coxstrata
