#include "coxstrata/rational.hpp"

#include "coxstrata/errors.hpp"

namespace coxstrata {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Rational parse_rational(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty rational");
  const auto slash = body.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("malformed rational '" + std::string(body) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(body) + "'");
  Rational q(Integer(n), d);
  q.canonicalize();
  return q;
}

}  // namespace coxstrata
