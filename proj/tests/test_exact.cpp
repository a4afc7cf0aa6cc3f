#include <doctest.h>

#include "coxstrata/cyclotomic.hpp"
#include "coxstrata/errors.hpp"
#include "coxstrata/poly.hpp"
#include "coxstrata/ratfn.hpp"
#include "gen.hpp"

using namespace coxstrata;

TEST_SUITE("exact") {
  TEST_CASE("rational text round trip") {
    for (int i = 0; i < 200; ++i) {
      const Rational q = gen::rational(1000);
      CHECK(parse_rational(to_string(q)) == q);
    }
    CHECK(parse_rational(" 6/4 ") == fraction(3, 2));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(30) == 8);
    const auto& phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    REQUIRE(phi12.size() == 5);
    CHECK(phi12[0] == 1);
    CHECK(phi12[2] == -1);
    CHECK(phi12[4] == 1);
  }

  TEST_CASE("field axioms on random elements") {
    for (int n : {3, 5, 7, 8, 12, 15}) {
      CAPTURE(n);
      for (int i = 0; i < 25; ++i) {
        const auto a = gen::cyc(n), b = gen::cyc(n), c = gen::cyc(n);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == CycRat());
        if (!a.is_zero()) CHECK(a * a.inverse() == CycRat::rational(1, n));
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
      }
    }
  }

  TEST_CASE("roots of unity") {
    for (int n : {5, 7, 8, 9}) {
      const auto z = CycRat::zeta(n);
      CycRat power = CycRat::rational(1, n), sum;
      for (int k = 0; k < n; ++k) {
        CHECK(power == CycRat::zeta(n, k));
        sum += power;
        power *= z;
      }
      CHECK(power == CycRat::rational(1, n));
      CHECK(sum.is_zero());
      CHECK(z.conj() == CycRat::zeta(n, -1));
    }
    // 2cos(2pi/5) = (sqrt5 - 1)/2 satisfies x^2 + x - 1 = 0.
    const auto x = CycRat::zeta(5) + CycRat::zeta(5, -1);
    CHECK((x * x + x - CycRat(1)).is_zero());
  }

  TEST_CASE("rational detection") {
    const auto x = CycRat::zeta(7) + CycRat::zeta(7, -1);
    CHECK_FALSE(x.is_rational());
    CHECK_THROWS_AS(cyc_to_rational(x), NotRational);
    // Sum of all primitive 7th roots of unity is -1.
    CycRat s;
    for (int k = 1; k < 7; ++k) s += CycRat::zeta(7, k);
    CHECK(cyc_to_rational(s) == -1);
  }

  TEST_CASE("mixing conductors") {
    CHECK_THROWS_AS(CycRat::zeta(5) + CycRat::zeta(7), ConductorMismatch);
    CHECK_NOTHROW(CycRat::zeta(5) + CycRat(3));
  }

  TEST_CASE("scalar text round trip") {
    for (int i = 0; i < 50; ++i) {
      const auto a = gen::cyc(10);
      CHECK(parse_cyc(a.to_text()) == a);
    }
    CHECK(parse_cyc("cyc(5): 0,1") == CycRat::zeta(5));
    CHECK_THROWS_AS(parse_cyc("cyc(5):1,2,3,4,5"), ParseError);
  }

  TEST_CASE("polynomial division") {
    for (int i = 0; i < 100; ++i) {
      const auto a = gen::poly(8, 5), b = gen::poly(4, 5);
      if (b.is_zero()) continue;
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
      CHECK(poly_exact_div(a * b, b) == a);
    }
  }

  TEST_CASE("integer polynomials divide exactly or throw") {
    const PolyZ u_minus_1(std::vector<Integer>{-1, 1});
    const PolyZ p = u_minus_1 * u_minus_1 * PolyZ(std::vector<Integer>{3, 0, 2});
    CHECK(poly_exact_div(p, u_minus_1) == u_minus_1 * PolyZ(std::vector<Integer>{3, 0, 2}));
    CHECK_THROWS_AS(poly_exact_div(PolyZ(std::vector<Integer>{1, 1}), PolyZ(std::vector<Integer>{0, 2})), InexactDivision);
  }

  TEST_CASE("gcd divides both arguments") {
    for (int i = 0; i < 50; ++i) {
      const auto common = gen::poly(3);
      const auto a = gen::poly(3) * common, b = gen::poly(3) * common;
      if (a.is_zero() || b.is_zero()) continue;
      const auto g = gcd(a, b);
      CHECK(divmod(a, g).second.is_zero());
      CHECK(divmod(b, g).second.is_zero());
      if (!common.is_zero()) CHECK(divmod(g, make_monic(common)).second.is_zero());
    }
  }

  TEST_CASE("polynomial text forms") {
    const auto p = parse_poly("1,0,-2,0,1");
    CHECK(to_text(p) == "1,0,-2,0,1");
    CHECK(to_v_string(p) == "v^8-2v^4+1");
    CHECK(to_text(PolyU()) == "0");
    CHECK(parse_poly("0").is_zero());
    const auto info = leading_and_constant(parse_poly("0,0,0,-2"));
    CHECK(info.leading == -2);
    CHECK(info.v_degree == 6);
    CHECK(info.constant == 0);
    CHECK_THROWS_AS(require_integer_coefficients(parse_poly("1/2"), "test"), NotIntegral);
  }

  TEST_CASE("rational functions stay reduced") {
    const auto u = PolyU::variable();
    const PolyU one(1);
    const RatFnU r((u - one) * (u + one), (u - one) * PolyU(2));
    CHECK(r.is_polynomial());
    CHECK(r == RatFnU(PolyU(std::vector<CycRat>{fraction(1, 2), fraction(1, 2)})));
    for (int i = 0; i < 30; ++i) {
      const auto a = gen::poly(3), b = gen::poly(3), c = gen::poly(3), d = gen::poly(3);
      if (b.is_zero() || d.is_zero()) continue;
      const RatFnU x(a, b), y(c, d);
      CHECK(x + y == y + x);
      CHECK((x * y) * RatFnU(b) == RatFnU(a) * y);
      CHECK(x.denominator().leading() == CycRat(1));
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}
