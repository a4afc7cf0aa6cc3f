#include <doctest.h>

#include <map>

#include "coxstrata/crosssec.hpp"
#include "coxstrata/errors.hpp"
#include "gen.hpp"

using namespace coxstrata;

namespace {

const FiberData& h4_fibers() {
  static const FiberData f = fibers_for_type(parse_group_type("H4"));
  return f;
}

const Section& section_over(const std::vector<Section>& s, const std::string& irr) {
  for (const auto& x : s)
    if (x.irr == irr) return x;
  FAIL("no section over " << irr);
  return s.front();
}

}  // namespace

TEST_SUITE("crosssec") {
  TEST_CASE("H4 fiber over 36_5") {
    const auto& f = h4_fibers();
    CHECK(f.size() == 22);
    std::size_t total = 0;
    for (const auto& fiber : f) total += fiber.classes.size();
    CHECK(total == 34);
    CHECK(section_over(tau_prime(f), "36_5").chosen.label == "c_16");
    CHECK(section_over(tau_doubleprime(f), "36_5").chosen.label == "(123)");
    CHECK(section_over(tau_prime(f), "1_60").chosen.label == "(-)");
    CHECK(section_over(tau_doubleprime(f), "1_60").chosen.label == "(-)");
  }

  TEST_CASE("sections stay in their fibers") {
    for (const auto* name : {"B3", "H3", "H4", "I2(7)", "I2(10)"}) {
      const auto f = fibers_for_type(parse_group_type(name));
      CHECK(sections_in_fibers(f, tau_prime(f)));
      CHECK(sections_in_fibers(f, tau_doubleprime(f)));
    }
  }

  TEST_CASE("B3 fibers are singletons") {
    const auto f = fibers_for_type(parse_group_type("B3"));
    CHECK(f.size() == 9);
    std::size_t total = 0;
    for (const auto& fiber : f) total += fiber.classes.size();
    CHECK(total == 10);
    // 3_3 receives two classes; both filters still leave one.
    for (const auto& fiber : f)
      if (fiber.classes.size() > 1) CHECK(fiber.irr == "3_3");
  }

  TEST_CASE("dihedral sections invert the strata map") {
    for (int p = 3; p <= 14; ++p) {
      const auto f = fibers_for_type(parse_group_type("I2", p));
      const auto a = tau_prime(f), b = tau_doubleprime(f);
      for (std::size_t i = 0; i < f.size(); ++i) {
        REQUIRE(f[i].classes.size() == 1);
        CHECK(a[i].chosen == f[i].classes.front());
        CHECK(b[i].chosen == f[i].classes.front());
      }
    }
  }

  TEST_CASE("ties raise NonUnique with the survivors") {
    FiberData f{{"E", {{"a", 4, 0}, {"b", 4, 0}, {"c", 2, 1}}}};
    try {
      tau_prime(f);
      FAIL("expected NonUnique");
    } catch (const NonUnique& e) {
      CHECK(e.candidates() == std::vector<std::string>{"a", "b"});
    }
    CHECK(tau_doubleprime(f).front().chosen.label == "c");
    CHECK_THROWS_AS(tau_prime(FiberData{{"E", {}}}), InvariantViolation);
  }

  TEST_CASE("product decomposition") {
    const auto types = product_decompose("H3, I2(7),B3");
    REQUIRE(types.size() == 3);
    CHECK(types[1] == GroupType{'I', 2, 7});
    CHECK_THROWS_AS(product_decompose(""), ParseError);
    CHECK_THROWS_AS(fibers_for_type(parse_group_type("A3")), UnsupportedType);
  }

  TEST_CASE("products act componentwise") {
    const auto h3 = fibers_for_type(parse_group_type("H3"));
    const auto i7 = fibers_for_type(parse_group_type("I2(7)"));
    const auto prod = product_fibers({h3, i7});
    CHECK(prod.size() == 40);
    const auto a = tau_prime(prod), a1 = tau_prime(h3), a2 = tau_prime(i7);
    const auto b = tau_doubleprime(prod), b1 = tau_doubleprime(h3), b2 = tau_doubleprime(i7);
    for (std::size_t i = 0; i < h3.size(); ++i)
      for (std::size_t j = 0; j < i7.size(); ++j) {
        const auto& s = a[i * i7.size() + j];
        CHECK(s.irr == "[" + h3[i].irr + "," + i7[j].irr + "]");
        CHECK(s.chosen.label == "[" + a1[i].chosen.label + "," + a2[j].chosen.label + "]");
        CHECK(s.chosen.m == a1[i].chosen.m + a2[j].chosen.m);
        CHECK(b[i * i7.size() + j].chosen.label == "[" + b1[i].chosen.label + "," + b2[j].chosen.label + "]");
      }
    const auto single = product_fibers({h3});
    CHECK(single == h3);
    const auto i5 = fibers_for_type(parse_group_type("I2(5)"));
    const auto sq = product_fibers({i5, i5});
    for (const auto& fiber : sq) CHECK(fiber.classes.size() == 1);
  }

  TEST_CASE("random products keep sections in fibers") {
    const std::vector<std::string> pool{"B3", "H3", "I2(5)", "I2(6)", "I2(9)"};
    std::map<std::string, FiberData> cache;
    for (const auto& t : pool) cache[t] = fibers_for_type(parse_group_type(t));
    for (int trial = 0; trial < 12; ++trial) {
      const int n = gen::integer(2, 3);
      std::vector<FiberData> parts;
      for (int i = 0; i < n; ++i) parts.push_back(cache[pool[gen::integer(0, pool.size() - 1)]]);
      const auto f = product_fibers(parts);
      std::size_t expected = 1;
      for (const auto& p : parts) expected *= p.size();
      CHECK(f.size() == expected);
      CHECK(sections_in_fibers(f, tau_prime(f)));
      CHECK(sections_in_fibers(f, tau_doubleprime(f)));
    }
  }
}
