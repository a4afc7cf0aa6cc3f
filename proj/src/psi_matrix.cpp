#include "coxstrata/psi_matrix.hpp"

#include "coxstrata/errors.hpp"

namespace coxstrata {

IrrInfo IrrInfo::parse(std::string_view label) {
  const auto body = trim(label);
  const auto us = body.find('_');
  if (us == std::string_view::npos || us == 0 || us + 1 == body.size())
    throw ParseError("irreducible label '" + std::string(body) + "' is not of the form d_b");
  IrrInfo out;
  out.label = std::string(body);
  auto head = body.substr(0, us);
  while (!head.empty() && head.back() == '\'') {
    ++out.primes;
    head.remove_suffix(1);
  }
  try {
    const Rational d = parse_rational(head), b = parse_rational(body.substr(us + 1));
    if (!is_integer(d) || !is_integer(b) || d < 1 || b < 0) throw ParseError("");
    out.dim = static_cast<int>(d.get_num().get_si());
    out.b = static_cast<int>(b.get_num().get_si());
  } catch (const ParseError&) {
    throw ParseError("irreducible label '" + std::string(body) + "' is not of the form d_b");
  }
  return out;
}

std::string IrrInfo::render() const {
  return std::to_string(dim) + std::string(primes, '\'') + "_" + std::to_string(b);
}

ClassMeta class_meta(const ConjClass& c) {
  return {c.label, c.min_length, c.m, c.size(), c.min_length == 0};
}

PolyU integral_form(const PolyU& p, std::string_view context) {
  require_integer_coefficients(p, context);
  std::vector<CycRat> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.emplace_back(cyc_to_rational(c));
  return PolyU(std::move(coeffs));
}

PsiMatrix::PsiMatrix(std::string type, int rank, std::vector<ClassMeta> classes, std::vector<IrrInfo> irreps,
                     Matrix<PolyU> entries)
    : type_(std::move(type)),
      rank_(rank),
      classes_(std::move(classes)),
      irreps_(std::move(irreps)),
      entries_(std::move(entries)) {
  validate();
}

void PsiMatrix::validate() {
  if (classes_.size() != irreps_.size())
    throw DimensionMismatch(type_ + ": " + std::to_string(classes_.size()) + " classes but " +
                            std::to_string(irreps_.size()) + " irreducibles");
  if (entries_.rows() != classes_.size() || entries_.cols() != irreps_.size())
    throw DimensionMismatch(type_ + ": matrix shape does not match its labels");
  for (std::size_t i = 0; i < entries_.rows(); ++i)
    for (std::size_t j = 0; j < entries_.cols(); ++j)
      entries_(i, j) = integral_form(entries_(i, j), type_ + " entry (" + classes_[i].label + ", " + irreps_[j].label + ")");

  std::size_t identities = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].is_identity) {
      identity_row_ = i;
      ++identities;
    }
  if (identities != 1) throw InvariantViolation(type_ + ": expected exactly one identity class");

  bool have_sign = false, have_trivial = false;
  for (std::size_t j = 0; j < irreps_.size(); ++j) {
    if (irreps_[j].dim != 1) continue;
    if (!have_sign || irreps_[j].b > irreps_[sign_col_].b) sign_col_ = j;
    if (irreps_[j].b == 0) {
      trivial_col_ = j;
      have_trivial = true;
    }
    have_sign = true;
  }
  if (!have_sign || !have_trivial) throw InvariantViolation(type_ + ": no trivial or sign representation");

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const PolyU expected = i == identity_row_ ? PolyU(1) : PolyU();
    if (!(entries_(i, sign_col_) == expected))
      throw InvariantViolation(type_ + ": sign column is not the identity-class indicator at " + classes_[i].label);
  }
  for (std::size_t j = 0; j < irreps_.size(); ++j)
    if (!(entries_(identity_row_, j) == PolyU(irreps_[j].dim)))
      throw InvariantViolation(type_ + ": identity row differs from the dimension of " + irreps_[j].label);
}

std::size_t PsiMatrix::class_index(std::string_view label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  throw NoMatch(type_ + ": unknown class label '" + std::string(label) + "'");
}

std::size_t PsiMatrix::irr_index(std::string_view label) const {
  for (std::size_t j = 0; j < irreps_.size(); ++j)
    if (irreps_[j].label == label) return j;
  throw NoMatch(type_ + ": unknown irreducible label '" + std::string(label) + "'");
}

}  // namespace coxstrata
