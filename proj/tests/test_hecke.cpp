#include <doctest.h>

#include "coxstrata/hecke.hpp"
#include "coxstrata/verify.hpp"

using namespace coxstrata;

namespace {

// All reduced words of w, up to `limit` of them.
void reduced_words(const CoxGroup& g, Element w, Word& suffix, std::vector<Word>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (w == CoxGroup::identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int s = 0; s < g.rank(); ++s) {
    const Element ws = g.right(w, s);
    if (g.length(ws) >= g.length(w)) continue;
    suffix.push_back(s);
    reduced_words(g, ws, suffix, out, limit);
    suffix.pop_back();
  }
}

PolyZ z(std::vector<long> c) {
  std::vector<Integer> out(c.begin(), c.end());
  return PolyZ(std::move(out));
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("identity and simple reflections") {
    const auto g = CoxGroup::build(parse_group_type("B3"));
    const auto e1 = e_vector(g, CoxGroup::identity());
    CHECK(e1.support_size() == 1);
    CHECK(e1.at(CoxGroup::identity()) == z({1}));
    for (int s = 0; s < 3; ++s) {
      const Element x = g.from_word({s});
      const auto e = e_vector(g, x);
      CHECK(e.support_size() == 2);
      CHECK(e.at(CoxGroup::identity()) == z({-1, 1}));
      CHECK(e.at(x) == z({-1}));
    }
  }

  TEST_CASE("parallel and serial kernels agree") {
    for (const auto* name : {"B3", "H3"}) {
      const auto g = CoxGroup::build(parse_group_type(name));
      for (Element w = 0; w < g.order(); w += 7) CHECK(e_vector(g, w).coeffs == e_vector_serial(g, w).coeffs);
    }
    const auto h4 = CoxGroup::build(parse_group_type("H4"));
    const auto& c = h4.resolve_label("c_30");
    CHECK(e_vector(h4, c.representative).coeffs == e_vector_serial(h4, c.representative).coeffs);
  }

  TEST_CASE("independent of the reduced word") {
    for (const auto* name : {"B3", "H3"}) {
      const auto g = CoxGroup::build(parse_group_type(name));
      for (Element w = 0; w < g.order(); ++w) {
        if (g.length(w) > 8) continue;
        std::vector<Word> words;
        Word suffix;
        reduced_words(g, w, suffix, words, 4);
        REQUIRE(!words.empty());
        const auto reference = e_vector(g, w).coeffs;
        for (const auto& word : words) CHECK(e_vector_from_word(g, word, false).coeffs == reference);
      }
    }
  }

  TEST_CASE("non-reduced words are rejected") {
    const auto g = CoxGroup::build(parse_group_type("A2"));
    CHECK_THROWS(e_vector_from_word(g, {0, 0}));
  }

  TEST_CASE("matches the regular representation oracle") {
    const auto a2 = CoxGroup::build(parse_group_type("A2"));
    const Element longest = a2.order() - 1;
    const auto oracle = regular_rep_e_vector(a2, longest);
    const auto e = e_vector(a2, longest);
    for (Element y = 0; y < a2.order(); ++y) CHECK(oracle[y] == to_poly_u(e.at(y)));
    const auto b3 = CoxGroup::build(parse_group_type("B3"));
    for (Element w = 0; w < b3.order(); w += 5) {
      const auto o = regular_rep_e_vector(b3, w);
      const auto f = e_vector(b3, w);
      for (Element y = 0; y < b3.order(); ++y) CHECK(o[y] == to_poly_u(f.at(y)));
    }
  }

  TEST_CASE("support stays inside the Bruhat interval") {
    // y <= w iff some subword of a reduced word of w multiplies to y.
    const auto g = CoxGroup::build(parse_group_type("H3"));
    for (Element w = 0; w < g.order(); w += 3) {
      const auto& word = g.word(w);
      std::vector<bool> below(g.order());
      std::vector<Element> frontier{CoxGroup::identity()};
      below[CoxGroup::identity()] = true;
      for (int letter : word) {
        const auto current = frontier;
        for (Element x : current) {
          const Element y = g.right(x, letter);
          if (!below[y]) {
            below[y] = true;
            frontier.push_back(y);
          }
        }
      }
      const auto e = e_vector(g, w);
      for (Element y = 0; y < g.order(); ++y)
        if (!e.at(y).is_zero()) CHECK(below[y]);
    }
  }

  TEST_CASE("trivial column: degree, leading and constant terms") {
    for (const auto* name : {"A3", "B3", "H3", "I2(7)", "I2(10)"}) {
      const auto g = CoxGroup::build(parse_group_type(name));
      for (const auto& c : g.classes()) {
        const auto col = psi_trivial_column(g, c);
        const auto info = leading_and_constant(col);
        CHECK(info.leading == 1);
        CHECK(info.constant == 1);
        CHECK(static_cast<int>(info.v_degree) == 2 * (c.min_length + c.m - g.rank()));
      }
      CHECK(psi_trivial_column(g, g.classes()[g.identity_class()]) == PolyU(1));
    }
  }

  TEST_CASE("trivial column examples") {
    const auto b3 = CoxGroup::build(parse_group_type("B3"));
    CHECK(to_text(psi_trivial_column(b3, b3.resolve_label(".21"))) == "1,0,1");
    for (int p : {5, 9}) {
      const auto g = CoxGroup::build(parse_group_type("I2", p));
      for (int j = 1; 2 * j <= p; ++j) {
        const auto label = j == 1 ? std::string("c") : "c^" + std::to_string(j);
        std::vector<CycRat> want(2 * j - 1);
        for (int i = 0; i < j; ++i) want[2 * i] = 1;
        CHECK(psi_trivial_column(g, g.resolve_label(label)) == PolyU(want));
      }
    }
  }
}
