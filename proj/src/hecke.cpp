#include "coxstrata/hecke.hpp"

#include <gmp.h>

#include "coxstrata/errors.hpp"
#include "coxstrata/psi_matrix.hpp"

namespace coxstrata {
namespace {

// Coefficient rows for every element, width = word length + 1.
struct Buffer {
  std::size_t width = 0;
  std::vector<mpz_class> data;
  std::vector<char> live;

  Buffer(std::size_t elements, std::size_t w) : width(w), data(elements * w), live(elements, 0) {}
  mpz_class* row(std::size_t y) { return data.data() + y * width; }
};

template <bool Parallel>
void recurrence_step(const CoxGroup& g, int s, int step, Buffer& cur, Buffer& nxt) {
  const auto n = static_cast<long>(g.order());
  const auto& left = g.left_table(s);
  const int top = step + 1;  // highest degree after this step
#pragma omp parallel for schedule(dynamic, 256) if (Parallel)
  for (long yi = 0; yi < n; ++yi) {
    const auto y = static_cast<Element>(yi);
    const Element sy = left[y];
    const bool have_y = cur.live[y], have_sy = cur.live[sy];
    mpz_class* out = nxt.row(y);
    if (g.length(sy) > g.length(y)) {
      // e_{y,sw} = u (e_{y,w} - e_{sy,w}) - e_{y,w}
      if (!have_y && !have_sy) {
        nxt.live[y] = 0;
        continue;
      }
      const mpz_class* a = cur.row(y);
      const mpz_class* b = cur.row(sy);
      for (int i = 0; i <= top; ++i) {
        mpz_ptr o = out[i].get_mpz_t();
        mpz_set_ui(o, 0);
        if (i > 0) {
          if (have_y) mpz_add(o, o, a[i - 1].get_mpz_t());
          if (have_sy) mpz_sub(o, o, b[i - 1].get_mpz_t());
        }
        if (have_y && i < top) mpz_sub(o, o, a[i].get_mpz_t());
      }
      nxt.live[y] = 1;
    } else {
      // e_{y,sw} = -e_{sy,w}
      if (!have_sy) {
        nxt.live[y] = 0;
        continue;
      }
      const mpz_class* b = cur.row(sy);
      for (int i = 0; i <= top; ++i) {
        if (i < top) mpz_neg(out[i].get_mpz_t(), b[i].get_mpz_t());
        else mpz_set_ui(out[i].get_mpz_t(), 0);
      }
      nxt.live[y] = 1;
    }
  }
}

template <bool Parallel>
TVector run_recurrence(const CoxGroup& g, const Word& word) {
  const std::size_t width = word.size() + 1;
  Buffer cur(g.order(), width), nxt(g.order(), width);
  cur.live[CoxGroup::identity()] = 1;
  cur.row(CoxGroup::identity())[0] = 1;
  Element w = CoxGroup::identity();
  int step = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it, ++step) {
    const Element sw = g.left(*it, w);
    if (g.length(sw) != g.length(w) + 1) throw Error("word passed to the Hecke recurrence is not reduced");
    recurrence_step<Parallel>(g, *it, step, cur, nxt);
    std::swap(cur, nxt);
    w = sw;
  }
  TVector out;
  out.coeffs.resize(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (!cur.live[y]) continue;
    const mpz_class* r = cur.row(y);
    out.coeffs[y] = PolyZ(std::vector<Integer>(r, r + width));
  }
  return out;
}

}  // namespace

std::size_t TVector::support_size() const {
  std::size_t n = 0;
  for (const auto& c : coeffs) n += !c.is_zero();
  return n;
}

TVector e_vector(const CoxGroup& g, Element w) { return run_recurrence<true>(g, g.word(w)); }

TVector e_vector_serial(const CoxGroup& g, Element w) { return run_recurrence<false>(g, g.word(w)); }

TVector e_vector_from_word(const CoxGroup& g, const Word& word, bool parallel) {
  return parallel ? run_recurrence<true>(g, word) : run_recurrence<false>(g, word);
}

PolyU psi_trivial_column(const CoxGroup& g, const ConjClass& c) {
  const TVector e = e_vector(g, c.representative);
  const PolyZ u_minus_one(std::vector<Integer>{-1, 1});
  const int drop = g.rank() - c.m;
  return to_poly_u(poly_exact_div(e.at(CoxGroup::identity()), u_minus_one.pow(drop)));
}

bool sgn_column_check(const PsiMatrix& psi, std::size_t row) {
  const std::size_t col = psi.sign_column();
  const PolyU expected = psi.classes()[row].is_identity ? PolyU(1) : PolyU();
  return psi.entry(row, col) == expected;
}

}  // namespace coxstrata
