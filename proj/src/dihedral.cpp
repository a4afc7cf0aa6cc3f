#include "coxstrata/dihedral.hpp"

#include <cstdlib>

#include "coxstrata/errors.hpp"
#include "coxstrata/strata.hpp"

namespace coxstrata {
namespace {

void require_p(int p) {
  if (p < 3) throw UnsupportedType("dihedral type needs p >= 3");
}

int two_dim_count(int p) { return (p - 1) / 2; }

PolyU u_pow(int e) { return PolyU::monomial(CycRat(1), static_cast<std::size_t>(e)); }
PolyU u_minus_one() { return PolyU(std::vector<CycRat>{-1, 1}); }
PolyU sum_u(std::initializer_list<int> exps) {
  PolyU out;
  for (int e : exps) out += u_pow(e);
  return out;
}

// Index helpers over the irreducible order.
struct IrrIndex {
  int p;
  std::size_t two(int k) const { return static_cast<std::size_t>(k); }
  std::size_t prime() const { return static_cast<std::size_t>(two_dim_count(p) + 1); }
  std::size_t dprime() const { return prime() + 1; }
  std::size_t sign() const { return static_cast<std::size_t>(p % 2 ? two_dim_count(p) + 1 : two_dim_count(p) + 3); }
};

// Class order: c^j at j-1, then s, t, 1.
struct ClassIndex {
  int p;
  std::size_t rot(int j) const { return static_cast<std::size_t>(j - 1); }
  std::size_t s() const { return static_cast<std::size_t>(p / 2); }
  std::size_t t() const { return s() + 1; }
  std::size_t one() const { return static_cast<std::size_t>(p % 2 ? p / 2 + 1 : p / 2 + 2); }
};

Matrix<PolyU> mat_mul(const Matrix<PolyU>& a, const Matrix<PolyU>& b) { return multiply<PolyU>(a, b); }

PolyU trace(const Matrix<PolyU>& m) {
  PolyU t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

CycRat at_one(const PolyU& p) {
  CycRat sum;
  for (const auto& c : p.coefficients()) sum += c;
  return sum;
}

PolyU trace_of_word(int p, std::size_t irr, const Word& w) {
  const auto [ts, tt] = dihedral_hecke_rep(p, irr);
  Matrix<PolyU> acc(ts.rows(), ts.rows());
  for (std::size_t i = 0; i < ts.rows(); ++i) acc(i, i) = PolyU(1);
  for (int s : w) acc = mat_mul(acc, s == 0 ? ts : tt);
  return trace(acc);
}

}  // namespace

std::vector<IrrInfo> dihedral_irreps(int p) {
  require_p(p);
  std::vector<IrrInfo> out;
  out.push_back({"1_0", 1, 0, 0, "1_" + std::to_string(p)});
  for (int k = 1; k <= two_dim_count(p); ++k) {
    if (p % 2 == 0 && 2 * k == p) break;
    const std::string label = "2_" + std::to_string(k);
    out.push_back({label, 2, k, 0, label});
  }
  if (p % 2 == 0) {
    out.push_back({"1'", 1, p / 2, 1, "1''"});
    out.push_back({"1''", 1, p / 2, 2, "1'"});
  }
  out.push_back({"1_" + std::to_string(p), 1, p, 0, "1_0"});
  return out;
}

std::vector<ClassMeta> dihedral_classes(int p) {
  require_p(p);
  std::vector<ClassMeta> out;
  for (int j = 1; 2 * j <= p; ++j)
    out.push_back({j == 1 ? "c" : "c^" + std::to_string(j), 2 * j, 0, 2 * j == p ? 1u : 2u, false});
  const std::size_t reflections = p % 2 ? static_cast<std::size_t>(p) : static_cast<std::size_t>(p / 2);
  out.push_back({"s", 1, 1, reflections, false});
  if (p % 2 == 0) out.push_back({"t", 1, 1, reflections, false});
  out.push_back({"1", 0, 2, 1, true});
  return out;
}

std::vector<Word> dihedral_class_words(int p) {
  require_p(p);
  std::vector<Word> out;
  for (int j = 1; 2 * j <= p; ++j) {
    Word w;
    for (int i = 0; i < j; ++i) w.insert(w.end(), {0, 1});
    out.push_back(std::move(w));
  }
  out.push_back({0});
  if (p % 2 == 0) out.push_back({1});
  out.push_back({});
  return out;
}

std::pair<Matrix<PolyU>, Matrix<PolyU>> dihedral_hecke_rep(int p, std::size_t irr) {
  const auto irreps = dihedral_irreps(p);
  if (irr >= irreps.size()) throw Error("irreducible index out of range");
  const PolyU u = u_pow(1), neg_one(-1);
  const auto& e = irreps[irr];
  if (e.dim == 2) {
    const int k = e.b;
    const PolyU gamma(CycRat(2) + CycRat::zeta(p, k) + CycRat::zeta(p, -k));
    Matrix<PolyU> ts(2, 2), tt(2, 2);
    ts(0, 0) = neg_one;
    ts(0, 1) = PolyU(1);
    ts(1, 1) = u;
    tt(0, 0) = u;
    tt(1, 0) = u * gamma;
    tt(1, 1) = neg_one;
    return {ts, tt};
  }
  Matrix<PolyU> ts(1, 1), tt(1, 1);
  const bool s_up = e.label == "1_0" || e.label == "1'";
  const bool t_up = e.label == "1_0" || e.label == "1''";
  ts(0, 0) = s_up ? u : neg_one;
  tt(0, 0) = t_up ? u : neg_one;
  return {ts, tt};
}

Matrix<PolyU> dihedral_a(int p) {
  const auto classes = dihedral_classes(p);
  const auto words = dihedral_class_words(p);
  const auto irreps = dihedral_irreps(p);
  Matrix<PolyU> a(classes.size(), irreps.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < irreps.size(); ++j)
      a(i, j) = trace_of_word(p, j, words[i]) * u_minus_one().pow(classes[i].m);
  return a;
}

Matrix<CycRat> dihedral_a_prime(int p) {
  const auto irreps = dihedral_irreps(p);
  const IrrIndex ix{p};
  const std::size_t n = irreps.size();
  Matrix<CycRat> a(n, n);
  a(0, 0) = 1;
  a(ix.sign(), ix.sign()) = 1;
  const Rational inv_p = fraction(1, p);
  for (std::size_t j = 1; j < n; ++j) {
    if (irreps[j].dim != 2) continue;
    for (std::size_t k = 1; k < n; ++k) {
      if (irreps[k].dim != 2) continue;
      const long jk = static_cast<long>(irreps[j].b) * irreps[k].b;
      a(j, k) = (CycRat(2) - CycRat::zeta(p, jk) - CycRat::zeta(p, -jk)) * CycRat(inv_p);
    }
  }
  if (p % 2 == 0) {
    for (std::size_t j = 1; j < n; ++j) {
      if (irreps[j].dim != 2) continue;
      const Rational v = fraction((irreps[j].b % 2) ? 2 : 0, p);
      for (std::size_t e : {ix.prime(), ix.dprime()}) a(j, e) = a(e, j) = CycRat(v);
    }
    const int sgn_half = (p / 2) % 2 ? -1 : 1;
    const Rational diag = fraction(1 - sgn_half + p, 2 * p), off = fraction(1 - sgn_half - p, 2 * p);
    a(ix.prime(), ix.prime()) = a(ix.dprime(), ix.dprime()) = CycRat(diag);
    a(ix.prime(), ix.dprime()) = a(ix.dprime(), ix.prime()) = CycRat(off);
  }
  return a;
}

PolyU dihedral_h(int p) {
  require_p(p);
  return (u_pow(p) - PolyU(1)) * (u_pow(2) - PolyU(1));
}

Matrix<RatFnU> dihedral_a_doubleprime(int p) {
  const auto irreps = dihedral_irreps(p);
  const IrrIndex ix{p};
  const std::size_t n = irreps.size();
  const PolyU h = dihedral_h(p);
  Matrix<PolyU> num(n, n);
  auto is_end = [&](std::size_t e) { return e == 0 || e == ix.sign(); };
  auto is_mid = [&](std::size_t e) { return p % 2 == 0 && (e == ix.prime() || e == ix.dprime()); };
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      const int j = irreps[e].b, k = irreps[f].b;
      PolyU& out = num(e, f);
      if (is_end(e) && is_end(f)) {
        out = e == f ? u_pow(p) : PolyU(1);
      } else if (is_end(e) || is_end(f)) {
        const std::size_t other = is_end(e) ? f : e;
        if (is_mid(other)) out = u_pow(p / 2);
        else out = sum_u({irreps[other].b, p - irreps[other].b});
      } else if (is_mid(e) && is_mid(f)) {
        out = e == f ? u_pow(p) : PolyU(1);
      } else if (is_mid(e) || is_mid(f)) {
        const int q = is_mid(e) ? k : j;
        out = sum_u({q + p / 2, p / 2 - q});
      } else {
        const int d = std::abs(j - k);
        out = sum_u({j + k, p - j - k, d, p - d});
      }
    }
  }
  Matrix<RatFnU> a(n, n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) a(e, f) = RatFnU(num(e, f), h);
  return a;
}

Matrix<CycRat> dihedral_character_table(int p) {
  const auto classes = dihedral_classes(p);
  const auto words = dihedral_class_words(p);
  const auto irreps = dihedral_irreps(p);
  Matrix<CycRat> chi(irreps.size(), classes.size());
  for (std::size_t e = 0; e < irreps.size(); ++e)
    for (std::size_t c = 0; c < classes.size(); ++c) chi(e, c) = at_one(trace_of_word(p, e, words[c]));
  return chi;
}

Matrix<PolyU> dihedral_aa_closed_form(int p) {
  const auto classes = dihedral_classes(p);
  const auto irreps = dihedral_irreps(p);
  const IrrIndex ix{p};
  const ClassIndex cx{p};
  Matrix<PolyU> out(classes.size(), irreps.size());
  const PolyU q = u_minus_one(), q2 = q * q, uq = u_pow(1) * q;
  for (std::size_t e = 0; e < irreps.size(); ++e) out(cx.one(), e) = q2 * CycRat(irreps[e].dim);
  for (std::size_t e = 0; e < irreps.size(); ++e) {
    PolyU val;
    if (e == 0) val = uq;
    else if (e == ix.sign()) val = -q;
    else if (irreps[e].dim == 2) val = q2;
    if (p % 2 == 0 && (e == ix.prime() || e == ix.dprime())) {
      out(cx.s(), e) = e == ix.prime() ? uq : -q;
      out(cx.t(), e) = e == ix.prime() ? -q : uq;
      continue;
    }
    out(cx.s(), e) = val;
    if (p % 2 == 0) out(cx.t(), e) = val;
  }
  for (int j = 1; 2 * j <= p; ++j) {
    const std::size_t r = cx.rot(j);
    out(r, 0) = u_pow(2 * j);
    out(r, ix.sign()) = PolyU(1);
    if (2 * j < p) {
      if (j <= two_dim_count(p)) out(r, ix.two(j)) = -u_pow(j);
    } else {
      out(r, ix.prime()) = out(r, ix.dprime()) = -u_pow(p / 2);
    }
  }
  return out;
}

Matrix<PolyU> dihedral_psi_closed_form(int p) {
  const auto classes = dihedral_classes(p);
  const auto irreps = dihedral_irreps(p);
  const IrrIndex ix{p};
  const ClassIndex cx{p};
  Matrix<PolyU> out(classes.size(), irreps.size());
  for (int j = 1; 2 * j <= p; ++j) {
    const std::size_t r = cx.rot(j);
    for (int i = 0; i < j; ++i) out(r, 0) += u_pow(2 * i);
    for (int k = 1; k < j; ++k)
      for (int e = k; e <= 2 * j - 2 - k; e += 2) out(r, ix.two(k)) += u_pow(e);
  }
  for (std::size_t e = 0; e < irreps.size(); ++e) {
    if (e == ix.sign()) continue;
    const bool even = p % 2 == 0;
    if (!(even && e == ix.dprime())) out(cx.s(), e) = PolyU(1);
    if (even && e != ix.prime()) out(cx.t(), e) = PolyU(1);
  }
  for (std::size_t e = 0; e < irreps.size(); ++e) out(cx.one(), e) = PolyU(irreps[e].dim);
  return out;
}

PsiMatrix psi_dihedral(int p, bool parallel) {
  return assemble_psi(dihedral_a(p), dihedral_a_prime(p), dihedral_a_doubleprime(p), "I2(" + std::to_string(p) + ")", 2,
                      dihedral_classes(p), dihedral_irreps(p), parallel);
}

}  // namespace coxstrata
