#include "coxstrata/poly.hpp"

namespace coxstrata {

PolyU make_monic(const PolyU& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

PolyU gcd(PolyU a, PolyU b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

PolyU to_poly_u(const PolyZ& p) {
  std::vector<CycRat> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.emplace_back(Rational(c));
  return PolyU(std::move(coeffs));
}

std::string to_text(const PolyU& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ',';
    out += p.coefficients()[i].to_text();
  }
  return out;
}

std::string to_text(const PolyZ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coefficients()[i]);
  }
  return out;
}

PolyU parse_poly(std::string_view text) {
  auto rest = trim(text);
  if (rest.empty()) throw ParseError("empty polynomial");
  std::vector<CycRat> coeffs;
  while (true) {
    const auto sep = rest.find(',');
    coeffs.push_back(parse_cyc(rest.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + 1);
  }
  return PolyU(std::move(coeffs));
}

std::string to_v_string(const PolyU& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const auto& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (auto q = c.rational_value()) {
      negative = sgn(*q) < 0;
      const Rational mag = abs(*q);
      if (mag != 1 || i == 0) coeff = to_string(mag);
    } else {
      coeff = "(" + c.to_text() + ")";
    }
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    out += coeff;
    if (i > 0) out += "v^" + std::to_string(2 * i);
  }
  return out;
}

LeadingInfo leading_and_constant(const PolyU& p) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  return {cyc_to_rational(p.leading()), 2 * *p.degree(), cyc_to_rational(p.coefficient(0))};
}

void require_integer_coefficients(const PolyU& p, std::string_view context) {
  for (const auto& c : p.coefficients()) {
    auto q = c.rational_value();
    if (!q) throw NotRational(std::string(context) + ": coefficient is not rational", c.to_text());
    if (!is_integer(*q)) throw NotIntegral(std::string(context) + ": coefficient " + to_string(*q) + " is not an integer");
  }
}

bool has_negative_coefficient(const PolyU& p) {
  for (const auto& c : p.coefficients())
    if (sgn(cyc_to_rational(c)) < 0) return true;
  return false;
}

}  // namespace coxstrata
