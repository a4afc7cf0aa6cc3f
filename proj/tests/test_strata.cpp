#include <doctest.h>

#include <cstdio>
#include <map>

#include "coxstrata/dihedral.hpp"
#include "coxstrata/errors.hpp"
#include "coxstrata/golden.hpp"
#include "coxstrata/strata.hpp"

using namespace coxstrata;

namespace {

PsiMatrix golden_psi(const char* table, const char* type) {
  static std::map<std::string, CoxGroup> groups;
  auto it = groups.find(type);
  if (it == groups.end()) it = groups.emplace(type, CoxGroup::build(parse_group_type(type))).first;
  return psi_from_golden(embedded_table(table), it->second);
}

std::vector<std::string> labels(const PsiMatrix& psi, const std::vector<std::size_t>& cols) {
  std::vector<std::string> out;
  for (auto c : cols) out.push_back(psi.irreps()[c].label);
  return out;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("excluded sets") {
    CHECK(labels(golden_psi("b3_psi", "B3"), irr_star(golden_psi("b3_psi", "B3"))) == std::vector<std::string>{"1_3"});
    const auto h3 = golden_psi("h3_psi", "H3");
    CHECK(labels(h3, irr_star(h3)) == std::vector<std::string>{"3_6"});
    for (int p = 3; p <= 12; ++p) CHECK(irr_star(psi_dihedral(p)).empty());
  }

  TEST_CASE("H3 examples") {
    const auto psi = golden_psi("h3_psi", "H3");
    const auto r = sigma_map(psi, Mode::noncrystallographic);
    CHECK(r.irr_star_star.empty());
    for (const auto& c : r.classes) {
      const auto& label = psi.classes()[c.row].label;
      CHECK(c.x_max.size() == 1);
      CHECK(std::find(c.x.begin(), c.x.end(), c.sigma) != c.x.end());
      CHECK(std::find(c.x.begin(), c.x.end(), psi.trivial_column()) != c.x.end());
      if (label == "c_9") {
        CHECK(psi.irreps()[c.sigma].label == "4_3");
        CHECK(to_v_string(c.psi) == "v^6");
      }
      if (label == "c_15") {
        CHECK(psi.irreps()[c.sigma].label == "5_5");
        CHECK(to_v_string(c.psi) == "v^14+v^10");
        CHECK_FALSE(c.monomial);
      }
    }
    const auto image = image_report(psi, r);
    CHECK(image.image.size() == 8);
    CHECK(image.relation == ImageRelation::strict_subset);
    const auto five_two = psi.irr_index("5_2");
    CHECK(std::find(image.candidates.begin(), image.candidates.end(), five_two) != image.candidates.end());
    CHECK(std::find(image.image.begin(), image.image.end(), five_two) == image.image.end());
  }

  TEST_CASE("Weyl mode refuses a nonempty doubly excluded set") {
    std::vector<ClassMeta> classes{{"x", 1, 0, 1, false}, {"1", 0, 1, 1, true}};
    std::vector<IrrInfo> irreps{IrrInfo::parse("1_0"), IrrInfo::parse("1_1")};
    Matrix<PolyU> m(2, 2);
    m(0, 0) = parse_poly("1,-1,1");  // positive leading term, negative middle
    m(1, 0) = PolyU(1);
    m(1, 1) = PolyU(1);
    const PsiMatrix psi("toy", 1, classes, irreps, m);
    CHECK_THROWS_AS(sigma_map(psi, Mode::weyl), InvariantViolation);
    // Without Weyl's guarantee the trivial column drops out of the candidates.
    CHECK_THROWS_AS(sigma_map(psi, Mode::noncrystallographic), InvariantViolation);
  }

  TEST_CASE("dihedral strata are the ordered bijection") {
    for (int p = 3; p <= 16; ++p) {
      const auto psi = psi_dihedral(p);
      const auto r = sigma_map(psi, Mode::noncrystallographic);
      CHECK(image_report(psi, r).relation == ImageRelation::equal);
      for (const auto& c : r.classes) {
        CHECK(c.sigma == c.row);
        CHECK(c.monomial);
      }
    }
  }

  TEST_CASE("ties are reported, not broken") {
    std::vector<ClassMeta> classes{
        {"x", 2, 0, 1, false}, {"y", 2, 0, 1, false}, {"z", 1, 1, 1, false}, {"1", 0, 2, 1, true}};
    std::vector<IrrInfo> irreps{IrrInfo::parse("1_0"), IrrInfo::parse("2_1"), IrrInfo::parse("2'_1"),
                                IrrInfo::parse("1_3")};
    Matrix<PolyU> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, 0) = PolyU(1);
    m(0, 1) = PolyU(1);
    m(0, 2) = PolyU::variable();
    m(1, 1) = PolyU(1);
    m(3, 1) = PolyU(2);
    m(3, 2) = PolyU(2);
    m(3, 3) = PolyU(1);
    const PsiMatrix psi("toy", 2, classes, irreps, m);
    try {
      sigma_map(psi, Mode::weyl);
      FAIL("expected a tie");
    } catch (const NonSingletonMax& e) {
      CHECK(e.candidates() == std::vector<std::string>{"2_1", "2'_1"});
    }
  }

  TEST_CASE("validation rejects malformed matrices") {
    std::vector<ClassMeta> classes{{"x", 1, 0, 1, false}, {"1", 0, 1, 1, true}};
    std::vector<IrrInfo> irreps{IrrInfo::parse("1_0"), IrrInfo::parse("1_1")};
    Matrix<PolyU> m(2, 2);
    m(0, 0) = PolyU(1);
    m(1, 0) = PolyU(1);
    m(1, 1) = PolyU(1);
    m(0, 1) = PolyU(1);  // sign column must vanish off the identity
    CHECK_THROWS_AS(PsiMatrix("toy", 1, classes, irreps, m), InvariantViolation);
    m(0, 1) = PolyU();
    m(0, 0) = PolyU(CycRat(fraction(1, 2)));
    CHECK_THROWS_AS(PsiMatrix("toy", 1, classes, irreps, m), NotIntegral);
    m(0, 0) = PolyU(CycRat::zeta(5));
    CHECK_THROWS_AS(PsiMatrix("toy", 1, classes, irreps, m), NotRational);
    CHECK_THROWS_AS(PsiMatrix("toy", 1, classes, irreps, Matrix<PolyU>(2, 3)), DimensionMismatch);
  }

  TEST_CASE("irreducible labels round trip") {
    for (const auto* text : {"1_0", "30'_10", "30_10", "16_21", "4_37", "1''_4"}) {
      const auto e = IrrInfo::parse(text);
      CHECK(e.render() == text);
      CHECK(IrrInfo::parse(e.render()) == e);
    }
    const auto e = IrrInfo::parse("30'_10");
    CHECK(e.dim == 30);
    CHECK(e.b == 10);
    CHECK(e.primes == 1);
    CHECK_THROWS_AS(IrrInfo::parse("30"), ParseError);
  }

  TEST_CASE("generic A'' reproduces the dihedral matrix") {
    // Row 1_0 of the generic formula is Delta(E (x) sgn) / h, which fixes the
    // degrees; the rest of the matrix is then a consistency check.
    for (int p : {5, 6, 7}) {
      CAPTURE(p);
      const auto target = dihedral_a_doubleprime(p);
      const auto irr = dihedral_irreps(p);
      const auto cls = dihedral_classes(p);
      const auto h = dihedral_h(p);
      std::vector<PolyU> deltas(irr.size());
      for (std::size_t f = 0; f < irr.size(); ++f) {
        std::size_t partner = 0;
        while (irr[partner].label != irr[f].sgn_partner) ++partner;
        const auto scaled = target(0, partner) * RatFnU(h);
        REQUIRE(scaled.is_polynomial());
        deltas[f] = scaled.numerator();
      }
      std::vector<std::size_t> sizes;
      for (const auto& c : cls) sizes.push_back(c.size);
      const auto generic = a_doubleprime_generic(dihedral_character_table(p), sizes, irr.size() - 1, deltas, h);
      CHECK(generic == target);
    }
  }

  TEST_CASE("generic A'' degenerate inputs") {
    Matrix<CycRat> chi(1, 1, CycRat(1));
    const PolyU h(std::vector<CycRat>{-1, 1});
    const auto single = a_doubleprime_generic(chi, {1}, 0, {PolyU(3)}, h);
    CHECK(single(0, 0) == RatFnU(PolyU(3), h));
    const auto chi5 = dihedral_character_table(5);
    std::vector<std::size_t> sizes;
    for (const auto& c : dihedral_classes(5)) sizes.push_back(c.size);
    const auto zero = a_doubleprime_generic(chi5, sizes, 3, std::vector<PolyU>(4), dihedral_h(5));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(zero(i, j).is_zero());
    CHECK_THROWS_AS(a_doubleprime_generic(chi5, {1, 2}, 3, std::vector<PolyU>(4), dihedral_h(5)), DimensionMismatch);
  }

  TEST_CASE("assembly rejects inexact denominators") {
    const auto a = dihedral_a(5);
    const auto ap = dihedral_a_prime(5);
    auto app = dihedral_a_doubleprime(5);
    app(0, 0) = app(0, 0) + RatFnU(PolyU(1), PolyU(std::vector<CycRat>{3, 1}));
    CHECK_THROWS(assemble_psi(a, ap, app, "I2(5)", 2, dihedral_classes(5), dihedral_irreps(5)));
  }

  TEST_CASE("ingestion is idempotent") {
    const auto g = CoxGroup::build(parse_group_type("H3"));
    const auto table = embedded_table("h3_psi");
    const std::string path = std::string(COXSTRATA_TEST_TMP) + "/h3_roundtrip.tbl";
    save_table(table, path);
    const auto reloaded = psi_from_golden(load_table(path), g);
    const auto a = sigma_map(psi_from_golden(table, g), Mode::noncrystallographic);
    const auto b = sigma_map(reloaded, Mode::noncrystallographic);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      CHECK(a.classes[i].sigma == b.classes[i].sigma);
      CHECK(a.classes[i].psi == b.classes[i].psi);
    }
    CHECK(a.image == b.image);
    std::remove(path.c_str());
  }
}
