#include <doctest.h>

#include "coxstrata/dihedral.hpp"
#include "coxstrata/golden.hpp"

using namespace coxstrata;

namespace {

PolyU u_pow(std::size_t k) { return PolyU::monomial(CycRat(1), k); }
const PolyU kUm1(std::vector<CycRat>{-1, 1});

Matrix<PolyU> identity(std::size_t n) {
  Matrix<PolyU> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PolyU(1);
  return m;
}

Matrix<PolyU> alternating(const Matrix<PolyU>& a, const Matrix<PolyU>& b, int length) {
  auto out = identity(a.rows());
  for (int i = 0; i < length; ++i) out = multiply<PolyU>(out, i % 2 ? b : a);
  return out;
}

std::size_t index_of(const std::vector<IrrInfo>& irr, const std::string& label) {
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (irr[i].label == label) return i;
  FAIL("no irreducible " << label);
  return 0;
}

}  // namespace

TEST_SUITE("dihedral") {
  TEST_CASE("irreducible metadata") {
    for (int p = 3; p <= 30; ++p) {
      const auto irr = dihedral_irreps(p);
      CHECK(irr.size() == static_cast<std::size_t>(p % 2 ? (p + 3) / 2 : (p + 6) / 2));
      CHECK(irr.size() == dihedral_classes(p).size());
      for (std::size_t i = 1; i < irr.size(); ++i) CHECK(irr[i - 1].b <= irr[i].b);
      for (const auto& e : irr) {
        const auto& partner = irr[index_of(irr, e.sgn_partner)];
        CHECK(partner.sgn_partner == e.label);
        CHECK(partner.dim == e.dim);
      }
    }
  }

  TEST_CASE("Hecke representations satisfy the defining relations") {
    for (int p : {3, 4, 5, 6, 7, 8, 12}) {
      const auto irr = dihedral_irreps(p);
      for (std::size_t e = 0; e < irr.size(); ++e) {
        CAPTURE(p);
        CAPTURE(irr[e].label);
        const auto [ts, tt] = dihedral_hecke_rep(p, e);
        for (const auto& t : {ts, tt}) {
          // (T + 1)(T - u) = 0
          Matrix<PolyU> plus = t, minus = t;
          for (std::size_t i = 0; i < t.rows(); ++i) {
            plus(i, i) += PolyU(1);
            minus(i, i) -= u_pow(1);
          }
          CHECK(multiply<PolyU>(plus, minus) == Matrix<PolyU>(t.rows(), t.rows()));
        }
        CHECK(alternating(ts, tt, p) == alternating(tt, ts, p));
      }
    }
  }

  TEST_CASE("A matrix anchors") {
    for (int p : {5, 8, 11}) {
      const auto a = dihedral_a(p);
      const auto irr = dihedral_irreps(p);
      const auto cls = dihedral_classes(p);
      const std::size_t s = p / 2, one = cls.size() - 1;
      for (std::size_t e = 0; e < irr.size(); ++e) {
        if (irr[e].dim != 2) continue;
        CHECK(a(s, e) == kUm1 * kUm1);
        CHECK(a(one, e) == kUm1 * kUm1 * PolyU(2));
        for (int j = 1; 2 * j <= p; ++j) {
          const long jk = static_cast<long>(j) * irr[e].b;
          const auto trace = CycRat::zeta(p, jk) + CycRat::zeta(p, -jk);
          CHECK(a(j - 1, e) == u_pow(j) * trace);
        }
      }
      for (int j = 1; 2 * j <= p; ++j) CHECK(a(j - 1, 0) == u_pow(2 * j));
    }
  }

  TEST_CASE("A' identities") {
    for (int p = 3; p <= 30; ++p) {
      CAPTURE(p);
      const auto a = dihedral_a_prime(p);
      const auto irr = dihedral_irreps(p);
      CHECK(a(0, 0) == CycRat(1));
      for (std::size_t e = 0; e < irr.size(); ++e) {
        CycRat dim_sum;
        for (std::size_t f = 0; f < irr.size(); ++f) {
          CHECK(a(e, f) == a(f, e));
          const auto fs = index_of(irr, irr[f].sgn_partner), es = index_of(irr, irr[e].sgn_partner);
          CHECK(a(e, fs) == a(es, f));
          dim_sum += a(e, f) * CycRat(irr[f].dim);
        }
        CHECK(dim_sum == CycRat(irr[e].dim));
      }
    }
    const auto a6 = dihedral_a_prime(6);
    const auto irr6 = dihedral_irreps(6);
    CHECK(a6(index_of(irr6, "1'"), index_of(irr6, "1''")) == CycRat(fraction(-1, 3)));
  }

  TEST_CASE("A'' shape") {
    for (int p : {3, 6, 7, 10, 13}) {
      const auto a = dihedral_a_doubleprime(p);
      const auto h = dihedral_h(p);
      const auto irr = dihedral_irreps(p);
      const std::size_t last = irr.size() - 1;
      CHECK(a(0, last) == RatFnU(PolyU(1), h));
      CHECK(a(0, 0) == RatFnU(u_pow(p), h));
      CHECK(a(last, last) == RatFnU(u_pow(p), h));
      for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = 0; j < irr.size(); ++j) {
          CHECK(a(i, j) == a(j, i));
          CHECK((a(i, j) * RatFnU(h)).is_polynomial());
          if (irr[i].dim == 2 && irr[j].dim == 2) {
            const int x = irr[i].b, y = irr[j].b, d = std::abs(x - y);
            const auto num = u_pow(x + y) + u_pow(p - x - y) + u_pow(d) + u_pow(p - d);
            CHECK(a(i, j) == RatFnU(num, h));
          }
        }
    }
  }

  TEST_CASE("character table orthogonality") {
    for (int p : {5, 6, 9, 12}) {
      const auto chi = dihedral_character_table(p);
      const auto cls = dihedral_classes(p);
      for (std::size_t e = 0; e < chi.rows(); ++e)
        for (std::size_t f = 0; f < chi.rows(); ++f) {
          CycRat sum;
          for (std::size_t c = 0; c < cls.size(); ++c)
            sum += CycRat(static_cast<long>(cls[c].size)) * chi(e, c) * chi(f, c).conj();
          CHECK(sum == CycRat(e == f ? 2 * p : 0));
        }
    }
  }

  TEST_CASE("p = 5 product") {
    const auto psi = psi_dihedral(5);
    CHECK(to_text(psi.entry(1, 0)) == "1,0,1");
    CHECK(to_text(psi.entry(1, 1)) == "0,1");
    CHECK(to_text(psi.entry(2, 3)) == "0");
    CHECK(psi.entries() == dihedral_psi_closed_form(5));
  }

  TEST_CASE("serial and parallel assembly agree") {
    for (int p : {9, 16}) CHECK(psi_dihedral(p, false).entries() == psi_dihedral(p, true).entries());
  }

  TEST_CASE("class words land in their classes") {
    for (int p : {5, 8}) {
      const auto g = CoxGroup::build(parse_group_type("I2", p));
      const auto words = dihedral_class_words(p);
      const auto cls = dihedral_classes(p);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = g.resolve_label(cls[i].label);
        CHECK(g.class_of(g.from_word(words[i])) == g.resolve_index(cls[i].label));
        CHECK(static_cast<int>(words[i].size()) == c.min_length);
        CHECK(cls[i].m == c.m);
        CHECK(cls[i].size == c.size());
      }
    }
  }
}
