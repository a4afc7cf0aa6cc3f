#include "coxstrata/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "coxstrata/errors.hpp"

namespace coxstrata {
namespace {

using IntPoly = std::vector<Integer>;

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

IntPoly x_power_minus_one(int d) {
  IntPoly f(d + 1);
  f[0] = -1;
  f[d] = 1;
  return f;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic divisor.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw InexactDivision("cyclotomic product is not exact");
  return q;
}

IntPoly compute_cyclotomic(int n) {
  IntPoly num{1};
  std::vector<IntPoly> den;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = moebius(n / d);
    if (mu == 1) num = multiply(num, x_power_minus_one(d));
    if (mu == -1) den.push_back(x_power_minus_one(d));
  }
  for (const auto& f : den) num = divide_monic(num, f);
  return num;
}

// Reduce a coefficient vector in powers of zeta_N modulo Phi_N in place.
void reduce(std::vector<Rational>& c, int conductor) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (sgn(c[i]) == 0) continue;
    const Rational top = c[i];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) c[i - deg + j] -= top * phi[j];
    c[i] = 0;
  }
  if (c.size() > deg) c.resize(deg);
}

}  // namespace

int euler_phi(int n) {
  return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic polynomial needs a positive index");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycRat::CycRat(const Rational& value) {
  if (sgn(value) != 0) coeffs_.push_back(value);
}

CycRat::CycRat(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  trim();
}

CycRat CycRat::rational(const Rational& value, int conductor) {
  CycRat out(value);
  out.conductor_ = conductor;
  return out;
}

CycRat CycRat::zeta(int conductor, long k) {
  if (conductor < 1) throw Error("conductor must be positive");
  long e = k % conductor;
  if (e < 0) e += conductor;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1);
  powers[e] = 1;
  return from_powers(conductor, std::move(powers));
}

CycRat CycRat::from_powers(int conductor, std::vector<Rational> powers) {
  if (conductor < 1) throw Error("conductor must be positive");
  reduce(powers, conductor);
  return CycRat(conductor, std::move(powers));
}

std::vector<Rational> CycRat::coefficients() const {
  std::vector<Rational> out(coeffs_);
  out.resize(euler_phi(conductor_));
  return out;
}

std::optional<Rational> CycRat::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

void CycRat::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int CycRat::merged_conductor(const CycRat& rhs) const {
  if (conductor_ == rhs.conductor_) return conductor_;
  if (rhs.is_rational()) return is_rational() ? std::max(conductor_, rhs.conductor_) : conductor_;
  if (is_rational()) return rhs.conductor_;
  throw ConductorMismatch("cyclotomic conductors " + std::to_string(conductor_) + " and " +
                          std::to_string(rhs.conductor_) + " do not match");
}

CycRat CycRat::operator-() const {
  CycRat out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycRat& CycRat::operator+=(const CycRat& rhs) {
  conductor_ = merged_conductor(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& rhs) {
  conductor_ = merged_conductor(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

CycRat& CycRat::operator*=(const CycRat& rhs) {
  conductor_ = merged_conductor(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (rhs.coeffs_.size() == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_.front();
    return *this;
  }
  if (coeffs_.size() == 1) {
    const Rational scale = coeffs_.front();
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= scale;
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  reduce(prod, conductor_);
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

bool operator==(const CycRat& a, const CycRat& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  if (a.conductor_ != b.conductor_ && !a.is_rational()) return false;
  return a.coeffs_ == b.coeffs_;
}

CycRat CycRat::conj() const {
  if (is_rational()) return *this;
  std::vector<Rational> powers(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[(conductor_ - static_cast<int>(i)) % conductor_] += coeffs_[i];
  return from_powers(conductor_, std::move(powers));
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw Error("division by zero in cyclotomic field");
  if (is_rational()) return rational(1 / coeffs_.front(), conductor_);
  // Solve (this * x = 1) on the multiplication matrix of the power basis.
  const int n = euler_phi(conductor_);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    const auto col = (*this * zeta(conductor_, j)).coefficients();
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) throw InvariantViolation("singular multiplication matrix in Q(zeta)");
    std::swap(m[pivot], m[c]);
    const Rational lead = m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return CycRat(conductor_, std::move(x));
}

std::string CycRat::to_text() const {
  if (is_rational()) return to_string(coeffs_.empty() ? Rational(0) : coeffs_.front());
  std::string out = "cyc(" + std::to_string(conductor_) + "):";
  const auto full = coefficients();
  for (std::size_t i = 0; i < full.size(); ++i) out += (i ? ";" : "") + to_string(full[i]);
  return out;
}

Rational cyc_to_rational(const CycRat& a) {
  if (auto value = a.rational_value()) return *value;
  throw NotRational("value is not rational", a.to_text());
}

CycRat parse_cyc(std::string_view text) {
  const auto body = trim(text);
  if (body.rfind("cyc(", 0) != 0) return CycRat(parse_rational(body));
  const auto close = body.find(')');
  const auto colon = body.find(':');
  if (close == std::string_view::npos || colon == std::string_view::npos || colon < close)
    throw ParseError("malformed cyclotomic scalar '" + std::string(body) + "'");
  const int conductor = std::stoi(std::string(body.substr(4, close - 4)));
  if (conductor < 1) throw ParseError("conductor must be positive");
  std::vector<Rational> coeffs;
  auto rest = body.substr(colon + 1);
  while (true) {
    const auto sep = rest.find_first_of(";,");
    coeffs.push_back(parse_rational(rest.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + 1);
  }
  if (static_cast<int>(coeffs.size()) > euler_phi(conductor))
    throw ParseError("too many coefficients for conductor " + std::to_string(conductor));
  return CycRat::from_powers(conductor, std::move(coeffs));
}

}  // namespace coxstrata
