#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/errors.hpp"
#include "gen.hpp"

using namespace coxstrata;

namespace {

// Signed permutation of {1,2,3}: image[i] is the signed image of i+1.
using Signed = std::array<int, 3>;

Signed compose(const Signed& a, const Signed& b) {  // a after b
  Signed out{};
  for (int i = 0; i < 3; ++i) {
    const int x = b[i];
    const int y = a[std::abs(x) - 1];
    out[i] = x > 0 ? y : -y;
  }
  return out;
}

// Bipartition "alpha.beta" of positive and negative cycle lengths.
std::string signed_cycle_type(const Signed& s) {
  std::vector<int> pos, neg;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1, j = i;
    do {
      seen[j] = true;
      ++len;
      if (s[j] < 0) sign = -sign;
      j = std::abs(s[j]) - 1;
    } while (j != i);
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  std::string out;
  for (int x : pos) out += std::to_string(x);
  out += '.';
  for (int x : neg) out += std::to_string(x);
  return out;
}

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("orders and class counts") {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
        {"A1", {2, 2}},   {"A2", {6, 3}},   {"A3", {24, 5}},       {"B2", {8, 5}},        {"B3", {48, 10}},
        {"H3", {120, 10}}, {"H4", {14400, 34}}, {"I2(5)", {10, 4}}, {"I2(8)", {16, 7}}, {"I2(12)", {24, 9}}};
    for (const auto& [name, want] : expected) {
      CAPTURE(name);
      const auto g = CoxGroup::build(parse_group_type(name));
      CHECK(g.order() == want.first);
      CHECK(g.classes().size() == want.second);
      std::size_t total = 0;
      for (const auto& c : g.classes()) total += c.size();
      CHECK(total == g.order());
    }
  }

  TEST_CASE("type parsing") {
    CHECK(parse_group_type("I2", 7) == GroupType{'I', 2, 7});
    CHECK(parse_group_type("I2(9)").p == 9);
    CHECK(parse_group_type("H4").name() == "H4");
    CHECK_THROWS_AS(parse_group_type("E8"), UnsupportedType);
    CHECK_THROWS_AS(parse_group_type("I2(2)"), UnsupportedType);
  }

  TEST_CASE("words, lengths and products") {
    for (const auto* name : {"A3", "B3", "H3", "I2(7)"}) {
      CAPTURE(name);
      const auto g = CoxGroup::build(parse_group_type(name));
      for (Element w = 0; w < g.order(); ++w) {
        CHECK(static_cast<int>(g.word(w).size()) == g.length(w));
        CHECK(g.from_word(g.word(w)) == w);
        CHECK(g.length(g.inverse(w)) == g.length(w));
        CHECK(g.multiply(w, g.inverse(w)) == CoxGroup::identity());
      }
      for (int i = 0; i < 200; ++i) {
        const Element a = gen::integer(0, g.order() - 1), b = gen::integer(0, g.order() - 1),
                      c = gen::integer(0, g.order() - 1);
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      }
      // Exactly one longest element, of length = number of reflections.
      int longest = 0;
      for (Element w = 0; w < g.order(); ++w) longest += g.length(w) == g.max_length();
      CHECK(longest == 1);
    }
  }

  TEST_CASE("Coxeter relations hold") {
    for (const auto* name : {"B3", "H3", "H4", "I2(9)"}) {
      const auto g = CoxGroup::build(parse_group_type(name));
      const auto& m = g.coxeter_matrix();
      for (int s = 0; s < g.rank(); ++s)
        for (int t = 0; t < g.rank(); ++t) {
          const Element st = g.from_word({s, t});
          CHECK(g.power(st, m(s, t)) == CoxGroup::identity());
          for (int k = 1; k < m(s, t); ++k) CHECK(g.power(st, k) != CoxGroup::identity());
        }
    }
  }

  TEST_CASE("classes are closed under conjugation and reps are minimal") {
    for (const auto* name : {"B3", "H3", "I2(8)"}) {
      const auto g = CoxGroup::build(parse_group_type(name));
      for (std::size_t k = 0; k < g.classes().size(); ++k) {
        const auto& c = g.classes()[k];
        for (Element x : c.members) {
          CHECK(g.class_of(x) == k);
          CHECK(g.length(x) >= c.min_length);
          for (int s = 0; s < g.rank(); ++s) CHECK(g.class_of(g.left(s, g.right(x, s))) == k);
        }
        CHECK(g.length(c.representative) == c.min_length);
        CHECK(g.fixed_space_dim(c.representative) == c.m);
        CHECK(c.elliptic == (c.m == 0));
      }
    }
  }

  TEST_CASE("fixed-space dimension is a class function") {
    const auto g = CoxGroup::build(parse_group_type("H3"));
    for (const auto& c : g.classes())
      for (Element x : c.members) CHECK(g.fixed_space_dim(x) == c.m);
  }

  TEST_CASE("B3 labels are signed cycle types") {
    const auto g = CoxGroup::build(parse_group_type("B3"));
    // Generator 0 changes the sign of the first coordinate; 1 and 2 are the
    // transpositions (12) and (23).
    const std::array<Signed, 3> gens{Signed{-1, 2, 3}, Signed{2, 1, 3}, Signed{1, 3, 2}};
    std::set<std::string> labels;
    for (const auto& c : g.classes()) {
      Signed s{1, 2, 3};
      for (int letter : c.rep_word) s = compose(s, gens[letter]);
      std::string label = c.label;
      if (label == "111") label = "111.";
      CHECK(signed_cycle_type(s) == label);
      labels.insert(c.label);
      // The same holds for every member.
      for (Element x : c.members) {
        Signed t{1, 2, 3};
        for (int letter : g.word(x)) t = compose(t, gens[letter]);
        CHECK(signed_cycle_type(t) == label);
      }
    }
    CHECK(labels.size() == 10);
  }

  TEST_CASE("H4 class data") {
    const auto g = CoxGroup::build(parse_group_type("H4"));
    std::multiset<int> elliptic_lengths;
    for (const auto& c : g.classes())
      if (c.elliptic) elliptic_lengths.insert(c.min_length);
    CHECK(elliptic_lengths ==
          std::multiset<int>{4, 6, 8, 10, 12, 14, 16, 16, 18, 20, 22, 24, 26, 28, 30, 36, 38, 40, 48, 60});
    CHECK(g.resolve_label("c_16").size() == 144);
    CHECK(g.resolve_label("c'_16").size() == 480);
    CHECK(g.resolve_label("c_16").m == 0);
    CHECK(g.resolve_label("(123)").m == 1);
    CHECK(g.resolve_label("(-)").size() == 1);
    CHECK_THROWS_AS(g.resolve_label("c_16", true), Ambiguous);
    CHECK_THROWS_AS(g.resolve_label("c_17"), NoMatch);
    std::set<std::size_t> distinct;
    for (const auto* name : {"(123)", "(12123)", "(124)", "(243)", "(12)", "(123)^3", "(134)", "(23)", "(12124)",
                             "(123)^5", "(1212)", "(13)", "(1)", "(-)"})
      distinct.insert(g.resolve_index(name));
    CHECK(distinct.size() == 14);
  }

  TEST_CASE("label resolution") {
    const auto h3 = CoxGroup::build(parse_group_type("H3"));
    CHECK(h3.resolve_label("c_15").min_length == 15);
    CHECK(h3.resolve_label("(1212)").min_length == 4);
    CHECK(h3.resolve_label("(13)").m == 1);
    const auto d = CoxGroup::build(parse_group_type("I2(8)"));
    CHECK(d.resolve_label("c^4").size() == 1);
    CHECK(d.resolve_label("s").m == 1);
    const auto b3 = CoxGroup::build(parse_group_type("B3"));
    CHECK(b3.resolve_index("111.") == b3.resolve_index("111"));
    CHECK(b3.resolve_index("111") == b3.identity_class());
  }

  TEST_CASE("reflection matrices") {
    const auto g = CoxGroup::build(parse_group_type("H3"));
    CHECK(g.conductor() == 5);
    for (int s = 0; s < 3; ++s) CHECK(g.fixed_space_dim(g.from_word({s})) == 2);
    CHECK(g.fixed_space_dim(CoxGroup::identity()) == 3);
    const Element longest = g.from_word(g.word(g.order() - 1));
    CHECK(g.fixed_space_dim(longest) == 0);
  }
}
