#include "coxstrata/strata.hpp"

#include <algorithm>

#include "coxstrata/errors.hpp"

namespace coxstrata {
namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<std::string> labels_of(const PsiMatrix& psi, const std::vector<std::size_t>& cols) {
  std::vector<std::string> out;
  for (auto c : cols) out.push_back(psi.irreps()[c].label);
  return out;
}

std::vector<std::size_t> b_maximal(const PsiMatrix& psi, const std::vector<std::size_t>& cols) {
  int best = -1;
  for (auto c : cols) best = std::max(best, psi.irreps()[c].b);
  std::vector<std::size_t> out;
  for (auto c : cols)
    if (psi.irreps()[c].b == best) out.push_back(c);
  return out;
}

}  // namespace

Matrix<PolyU> multiply_rows(const Matrix<PolyU>& a, const Matrix<PolyU>& b, bool parallel) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product of non-conformable shapes");
  Matrix<PolyU> out(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PsiMatrix assemble_psi(const Matrix<PolyU>& a, const Matrix<CycRat>& a_prime, const Matrix<RatFnU>& a_doubleprime,
                       std::string type, int rank, std::vector<ClassMeta> classes, std::vector<IrrInfo> irreps,
                       bool parallel) {
  if (a.cols() != a_prime.rows() || a_prime.cols() != a_doubleprime.rows())
    throw DimensionMismatch(type + ": A, A', A'' are not conformable");
  if (a.rows() != classes.size() || a_doubleprime.cols() != irreps.size())
    throw DimensionMismatch(type + ": metadata does not match the matrix shapes");
  Matrix<PolyU> ap(a_prime.rows(), a_prime.cols());
  for (std::size_t i = 0; i < ap.rows(); ++i)
    for (std::size_t j = 0; j < ap.cols(); ++j) ap(i, j) = PolyU(a_prime(i, j));
  const Matrix<PolyU> aa = multiply_rows(a, ap, parallel);

  PolyU d(1);
  for (std::size_t i = 0; i < a_doubleprime.rows(); ++i)
    for (std::size_t j = 0; j < a_doubleprime.cols(); ++j) d = lcm(d, a_doubleprime(i, j).denominator());
  Matrix<PolyU> cleared(a_doubleprime.rows(), a_doubleprime.cols());
  for (std::size_t i = 0; i < cleared.rows(); ++i)
    for (std::size_t j = 0; j < cleared.cols(); ++j) {
      const auto& r = a_doubleprime(i, j);
      cleared(i, j) = r.numerator() * poly_exact_div(d, r.denominator());
    }
  Matrix<PolyU> product = multiply_rows(aa, cleared, parallel);
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j) product(i, j) = poly_exact_div(product(i, j), d);
  return PsiMatrix(std::move(type), rank, std::move(classes), std::move(irreps), std::move(product));
}

Matrix<RatFnU> a_doubleprime_generic(const Matrix<CycRat>& chi, const std::vector<std::size_t>& class_sizes,
                                     std::size_t sign_row, const std::vector<PolyU>& deltas, const PolyU& h) {
  const std::size_t n = chi.rows();
  if (class_sizes.size() != chi.cols() || deltas.size() != n || sign_row >= n)
    throw DimensionMismatch("character table, class sizes and degrees do not match");
  Rational order = 0;
  for (auto s : class_sizes) order += static_cast<unsigned long>(s);
  Matrix<RatFnU> out(n, n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) {
      PolyU num;
      for (std::size_t ce = 0; ce < n; ++ce) {
        CycRat k;
        for (std::size_t c = 0; c < chi.cols(); ++c)
          k += CycRat(Rational(static_cast<unsigned long>(class_sizes[c]))) * chi(e, c) * chi(f, c) * chi(ce, c) *
               chi(sign_row, c);
        k *= CycRat(1 / order);
        if (!k.is_zero()) num += deltas[ce] * k;
      }
      out(e, f) = RatFnU(num, h);
    }
  return out;
}

std::vector<std::size_t> irr_star(const PsiMatrix& psi) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < psi.irreps().size(); ++j)
    for (std::size_t i = 0; i < psi.classes().size(); ++i) {
      const auto& e = psi.entry(i, j);
      if (!e.is_zero() && sgn(leading_and_constant(e).leading) < 0) {
        out.push_back(j);
        break;
      }
    }
  return out;
}

StrataReport sigma_map(const PsiMatrix& psi, Mode mode) {
  StrataReport report;
  report.mode = mode;
  report.irr_star = irr_star(psi);
  const std::size_t nc = psi.classes().size(), ni = psi.irreps().size();

  auto support = [&](std::size_t i, const std::vector<std::size_t>& excluded) {
    std::vector<std::size_t> x;
    for (std::size_t j = 0; j < ni; ++j)
      if (!contains(excluded, j) && !psi.entry(i, j).is_zero()) x.push_back(j);
    return x;
  };

  // Irr_** from the b-maximal parts of the X_C.
  for (std::size_t i = 0; i < nc; ++i)
    for (auto j : b_maximal(psi, support(i, report.irr_star)))
      if (has_negative_coefficient(psi.entry(i, j)) && !contains(report.irr_star_star, j))
        report.irr_star_star.push_back(j);
  std::sort(report.irr_star_star.begin(), report.irr_star_star.end());
  if (mode == Mode::weyl && !report.irr_star_star.empty())
    throw InvariantViolation(psi.type() + ": Weyl-mode extraction found a nonempty doubly excluded set " +
                             labels_of(psi, report.irr_star_star).front());

  std::vector<std::size_t> excluded = report.irr_star;
  excluded.insert(excluded.end(), report.irr_star_star.begin(), report.irr_star_star.end());
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& meta = psi.classes()[i];
    ClassReport cr;
    cr.row = i;
    cr.x = support(i, excluded);
    if (!contains(cr.x, psi.trivial_column()))
      throw InvariantViolation(psi.type() + ": trivial representation missing from the candidates of " + meta.label);
    cr.x_max = b_maximal(psi, cr.x);
    if (cr.x_max.size() != 1) throw NonSingletonMax(meta.label, labels_of(psi, cr.x_max));
    cr.sigma = cr.x_max.front();
    cr.psi = psi.entry(i, cr.sigma);
    cr.expected_exponent = meta.min_length + meta.m - psi.rank();
    cr.monomial = cr.expected_exponent >= 0 && cr.expected_exponent % 2 == 0 &&
                  cr.psi == PolyU::monomial(CycRat(1), static_cast<std::size_t>(cr.expected_exponent / 2));
    if (!contains(report.image, cr.sigma)) report.image.push_back(cr.sigma);
    report.classes.push_back(std::move(cr));
  }
  std::sort(report.image.begin(), report.image.end());
  return report;
}

ImageReport image_report(const PsiMatrix& psi, const StrataReport& report) {
  ImageReport out;
  out.image = report.image;
  for (std::size_t j = 0; j < psi.irreps().size(); ++j)
    if (!contains(report.irr_star, j) && !contains(report.irr_star_star, j)) out.candidates.push_back(j);
  const bool inside = std::all_of(out.image.begin(), out.image.end(), [&](auto j) { return contains(out.candidates, j); });
  if (inside && out.image.size() == out.candidates.size()) out.relation = ImageRelation::equal;
  else if (inside) out.relation = ImageRelation::strict_subset;
  return out;
}

}  // namespace coxstrata
