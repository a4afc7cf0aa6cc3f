#include "coxstrata/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "coxstrata/crosssec.hpp"
#include "coxstrata/dihedral.hpp"
#include "coxstrata/errors.hpp"
#include "coxstrata/golden.hpp"
#include "coxstrata/hecke.hpp"
#include "coxstrata/strata.hpp"

namespace coxstrata {
namespace {

using Details = std::vector<std::string>;

PolyU u_power(std::size_t k) { return PolyU::monomial(CycRat(1), k); }

std::vector<std::string> labels_of(const PsiMatrix& psi, const std::vector<std::size_t>& cols) {
  std::vector<std::string> out;
  for (auto c : cols) out.push_back(psi.irreps()[c].label);
  return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

void report_diffs(Details& out, const std::string& what, const std::vector<CellDiff>& diffs) {
  for (const auto& d : diffs)
    out.push_back(what + " cell (" + d.row + ", " + d.col + "): computed " + to_text(d.computed) + ", table " +
                  to_text(d.golden));
}

// --- criterion 1 -----------------------------------------------------------

bool dihedral_golden(Details& out) {
  for (int p : {5, 7, 8}) {
    const auto psi = psi_dihedral(p);
    const auto table = embedded_table("dihedral_psi_p" + std::to_string(p));
    const auto diffs = diff(psi, table);
    report_diffs(out, "p=" + std::to_string(p), diffs);
    // Annotated cells are adjudicated by the closed forms.
    const auto closed = dihedral_psi_closed_form(p);
    for (const auto& note : table.typos) {
      const std::size_t i = psi.class_index(note.row);
      const std::size_t j = psi.irr_index(note.col);
      if (!(closed(i, j) == table.at(note.row, note.col)))
        out.push_back("p=" + std::to_string(p) + " annotated cell (" + note.row + ", " + note.col +
                      ") disagrees with the closed form");
    }
  }
  return out.empty();
}

// --- criteria 2, 3 ---------------------------------------------------------

bool dihedral_closed_forms(Details& out) {
  for (int p = 3; p <= 30; ++p) {
    const auto psi = psi_dihedral(p);
    const auto closed = dihedral_psi_closed_form(p);
    for (std::size_t i = 0; i < closed.rows(); ++i)
      for (std::size_t j = 0; j < closed.cols(); ++j)
        if (!(psi.entry(i, j) == closed(i, j)))
          out.push_back("p=" + std::to_string(p) + " Psi(" + psi.classes()[i].label + ", " + psi.irreps()[j].label +
                        ") = " + to_text(psi.entry(i, j)) + ", closed form " + to_text(closed(i, j)));
    const auto aa = multiply<PolyU>(dihedral_a(p), dihedral_a_prime(p));
    const auto aa_closed = dihedral_aa_closed_form(p);
    for (std::size_t i = 0; i < aa.rows(); ++i)
      for (std::size_t j = 0; j < aa.cols(); ++j)
        if (!(aa(i, j) == aa_closed(i, j)))
          out.push_back("p=" + std::to_string(p) + " AA'(" + psi.classes()[i].label + ", " + psi.irreps()[j].label +
                        ") = " + to_text(aa(i, j)) + ", closed form " + to_text(aa_closed(i, j)));
  }
  for (int p : {7, 8}) {
    const auto aa = multiply<PolyU>(dihedral_a(p), dihedral_a_prime(p));
    std::vector<std::string> rows, cols;
    for (const auto& c : dihedral_classes(p)) rows.push_back(c.label);
    for (const auto& e : dihedral_irreps(p)) cols.push_back(e.label);
    report_diffs(out, "AA' p=" + std::to_string(p), diff(aa, rows, cols, embedded_table("dihedral_aa_p" + std::to_string(p))));
  }
  return out.empty();
}

bool integrality(Details& out) {
  for (int p = 3; p <= 30; ++p) {
    try {
      const auto psi = psi_dihedral(p);
      for (std::size_t i = 0; i < psi.entries().rows(); ++i)
        for (std::size_t j = 0; j < psi.entries().cols(); ++j)
          require_integer_coefficients(psi.entry(i, j), "p=" + std::to_string(p));
    } catch (const Error& e) {
      out.push_back(e.what());
    }
  }
  return out.empty();
}

// --- criterion 4 -----------------------------------------------------------

bool dihedral_sigma(Details& out) {
  for (int p = 3; p <= 30; ++p) {
    const std::string tag = "p=" + std::to_string(p);
    const auto psi = psi_dihedral(p);
    const auto report = sigma_map(psi, Mode::noncrystallographic);
    if (!report.irr_star.empty()) out.push_back(tag + " Irr_* = {" + join(labels_of(psi, report.irr_star)) + "}");
    if (!report.irr_star_star.empty())
      out.push_back(tag + " Irr_** = {" + join(labels_of(psi, report.irr_star_star)) + "}");
    if (report.image.size() != psi.irreps().size()) out.push_back(tag + " sigma is not onto");
    // Classes and irreducibles are listed in corresponding order: the j-th
    // rotation class goes to the j-th irreducible with entry u^{j-1}.
    for (const auto& c : report.classes) {
      const auto& label = psi.classes()[c.row].label;
      if (c.sigma != c.row) out.push_back(tag + " sigma(" + label + ") = " + psi.irreps()[c.sigma].label);
      PolyU expected = u_power(0);
      if (label.rfind("c^", 0) == 0) expected = u_power(std::stoul(label.substr(2)) - 1);
      if (!(c.psi == expected)) out.push_back(tag + " Psi at (" + label + ", sigma) = " + to_text(c.psi));
      if (!c.monomial) out.push_back(tag + " monomial check fails at " + label);
    }
  }
  return out.empty();
}

// --- criterion 5 -----------------------------------------------------------

bool lemmas_for_element(const CoxGroup& g, Element w, const TVector& e, Details& out) {
  const std::string tag = g.type().name() + " w=" + word_label(g.word(w));
  const int len = g.length(w);
  const Integer sign = len % 2 ? -1 : 1;
  bool ok = true;
  for (Element y = 0; y < e.coeffs.size(); ++y) {
    const auto& c = e.at(y);
    if (c.is_zero()) continue;
    if (g.length(y) > len) {
      out.push_back(tag + ": support element longer than w");
      ok = false;
    }
    if (c.coefficient(0) != sign) {
      out.push_back(tag + ": constant term of e_y,w is " + to_string(c.coefficient(0)) + " at y=" + word_label(g.word(y)));
      ok = false;
    }
    if (static_cast<int>(*c.degree()) + g.length(y) > len) {
      out.push_back(tag + ": degree bound fails at y=" + word_label(g.word(y)));
      ok = false;
    }
  }
  if (e.at(CoxGroup::identity()).coefficient(static_cast<std::size_t>(len)) != 1) {
    out.push_back(tag + ": top coefficient of e_1,w is not 1");
    ok = false;
  }
  return ok;
}

bool hecke_properties(Details& out) {
  std::vector<std::string> full{"I2(5)", "I2(6)", "I2(7)", "I2(8)", "A2", "B2", "A3", "B3", "H3"};
  for (const auto& name : full) {
    const auto g = CoxGroup::build(parse_group_type(name));
    for (Element w = 0; w < g.order(); ++w) lemmas_for_element(g, w, e_vector(g, w), out);
  }
  {
    const auto g = CoxGroup::build(parse_group_type("H4"));
    for (const auto& c : g.classes()) lemmas_for_element(g, c.representative, e_vector(g, c.representative), out);
  }
  // Parity and sign of |C| + m(C) - m(1).
  std::vector<std::string> typed{"A1", "A2", "A3", "B2", "B3", "H3", "H4"};
  for (int p = 3; p <= 30; ++p) typed.push_back("I2(" + std::to_string(p) + ")");
  for (const auto& name : typed) {
    const auto g = CoxGroup::build(parse_group_type(name));
    for (const auto& c : g.classes()) {
      const int excess = c.min_length + c.m - g.rank();
      if (excess < 0 || excess % 2)
        out.push_back(name + " class " + c.label + ": |C|+m-m(1) = " + std::to_string(excess));
    }
  }
  for (const auto& name : {"A2", "B2", "A3", "I2(5)", "I2(6)"}) {
    const auto g = CoxGroup::build(parse_group_type(name));
    for (const auto& c : g.classes()) {
      const auto oracle = regular_rep_e_vector(g, c.representative);
      const auto e = e_vector(g, c.representative);
      for (Element y = 0; y < g.order(); ++y)
        if (!(oracle[y] == to_poly_u(e.at(y))))
          out.push_back(std::string(name) + " class " + c.label + ": e-vector differs from the oracle at y=" +
                        word_label(g.word(y)));
    }
  }
  return out.empty();
}

// --- criterion 6 -----------------------------------------------------------

bool trivial_column(Details& out) {
  for (int p = 3; p <= 12; ++p) {
    const auto g = CoxGroup::build(parse_group_type("I2", p));
    const auto psi = psi_dihedral(p);
    for (std::size_t i = 0; i < psi.classes().size(); ++i) {
      const auto col = psi_trivial_column(g, g.resolve_label(psi.classes()[i].label));
      if (!(col == psi.entry(i, psi.trivial_column())))
        out.push_back("p=" + std::to_string(p) + " class " + psi.classes()[i].label + ": hecke " + to_text(col) +
                      ", pipeline " + to_text(psi.entry(i, psi.trivial_column())));
    }
  }
  for (const auto& [type, table_name] : {std::pair{"B3", "b3_psi"}, {"H3", "h3_psi"}}) {
    const auto g = CoxGroup::build(parse_group_type(type));
    const auto table = embedded_table(table_name);
    for (const auto& row : table.rows) {
      const auto col = psi_trivial_column(g, g.resolve_label(row));
      if (!(col == table.at(row, "1_0")))
        out.push_back(std::string(type) + " class " + row + ": hecke " + to_text(col) + ", table " +
                      to_text(table.at(row, "1_0")));
    }
  }
  // Named anchor values.
  const auto b3 = CoxGroup::build(parse_group_type("B3"));
  if (!(psi_trivial_column(b3, b3.resolve_label(".111")) == parse_poly("1,0,1,0,1,0,1")))
    out.push_back("B3 .111 trivial entry is not v^12+v^8+v^4+1");
  const auto h3 = CoxGroup::build(parse_group_type("H3"));
  if (!(psi_trivial_column(h3, h3.resolve_label("c_15")) == parse_poly("1,0,1,0,1,0,-1,0,1,0,1,0,1")))
    out.push_back("H3 c_15 trivial entry is not v^24+v^20+v^16-v^12+v^8+v^4+1");
  return out.empty();
}

// --- criterion 7 -----------------------------------------------------------

bool b3_extraction(Details& out) {
  const auto g = CoxGroup::build(parse_group_type("B3"));
  const auto psi = psi_from_golden(embedded_table("b3_psi"), g);
  const auto report = sigma_map(psi, Mode::weyl);
  const auto star = labels_of(psi, report.irr_star);
  if (star != std::vector<std::string>{"1_3"}) out.push_back("Irr_* = {" + join(star) + "}");
  for (const auto& c : report.classes) {
    if (c.x_max.size() != 1) out.push_back("class " + psi.classes()[c.row].label + ": X_C^max not a singleton");
    if (!c.monomial)
      out.push_back("class " + psi.classes()[c.row].label + ": Psi at sigma is " + to_text(c.psi) + ", expected u^" +
                    std::to_string(c.expected_exponent / 2));
  }
  for (std::size_t i = 0; i < psi.classes().size(); ++i)
    if (!sgn_column_check(psi, i)) out.push_back("sign column fails at " + psi.classes()[i].label);
  const std::size_t id = psi.identity_row();
  for (std::size_t j = 0; j < psi.irreps().size(); ++j)
    if (!(psi.entry(id, j) == PolyU(static_cast<long>(psi.irreps()[j].dim))))
      out.push_back("identity row entry at " + psi.irreps()[j].label + " is not the dimension");
  return out.empty();
}

// --- criterion 8 -----------------------------------------------------------

bool h3_extraction(Details& out) {
  const auto g = CoxGroup::build(parse_group_type("H3"));
  const auto psi = psi_from_golden(embedded_table("h3_psi"), g);
  const auto table = embedded_table("h3_sigma");
  const auto report = sigma_map(psi, Mode::noncrystallographic);
  std::map<std::size_t, const GoldenEntry*> expected;
  for (const auto& e : table.entries) expected[g.resolve_index(e.row)] = &e;
  for (const auto& c : report.classes) {
    const auto& label = psi.classes()[c.row].label;
    const auto it = expected.find(g.resolve_index(label));
    if (it == expected.end()) {
      out.push_back("class " + label + " missing from the strata table");
      continue;
    }
    const auto& want = *it->second;
    const auto& got = psi.irreps()[c.sigma].label;
    if (got != want.col) out.push_back("sigma(" + label + ") = " + got + ", table " + want.col);
    if (!(c.psi == want.value)) out.push_back("Psi(" + label + ", sigma) = " + to_text(c.psi) + ", table " + to_text(want.value));
    const bool several_terms =
        std::count_if(want.value.coefficients().begin(), want.value.coefficients().end(),
                      [](const CycRat& x) { return !x.is_zero(); }) > 1;
    if (c.monomial == several_terms)
      out.push_back("monomial check at " + label + " is " + (c.monomial ? "true" : "false") + " against table entry " +
                    to_text(want.value));
  }
  if (as_set(labels_of(psi, report.irr_star)) != as_set(table.set("irr_star")))
    out.push_back("Irr_* = {" + join(labels_of(psi, report.irr_star)) + "}");
  if (as_set(labels_of(psi, report.irr_star_star)) != as_set(table.set("irr_star_star")))
    out.push_back("Irr_** = {" + join(labels_of(psi, report.irr_star_star)) + "}");
  const auto image = image_report(psi, report);
  if (as_set(labels_of(psi, image.image)) != as_set(table.set("image")))
    out.push_back("image = {" + join(labels_of(psi, image.image)) + "}");
  if (image.relation != ImageRelation::strict_subset) out.push_back("image is not a strict subset of the candidates");
  return out.empty();
}

// --- criterion 9 -----------------------------------------------------------

bool same_classes(const CoxGroup& g, const std::vector<Section>& got, const std::vector<std::string>& want,
                  const std::string& what, Details& out) {
  std::set<std::size_t> a, b;
  for (const auto& s : got) a.insert(g.resolve_index(s.chosen.label));
  for (const auto& l : want) b.insert(g.resolve_index(l));
  if (a == b && got.size() == want.size()) return true;
  std::vector<std::string> extra, missing;
  for (const auto& s : got)
    if (!b.count(g.resolve_index(s.chosen.label)))
      extra.push_back(s.chosen.label + " (over " + s.irr + ", |C|=" + std::to_string(s.chosen.min_length) +
                      ", m=" + std::to_string(s.chosen.m) + ")");
  for (const auto& l : want)
    if (!a.count(g.resolve_index(l))) {
      const auto& c = g.resolve_label(l);
      missing.push_back(l + " (|C|=" + std::to_string(c.min_length) + ", m=" + std::to_string(c.m) + ")");
    }
  out.push_back(what + ": computed but not listed {" + join(extra) + "}, listed but not computed {" + join(missing) + "}");
  return false;
}

bool h4_cross_sections(Details& out) {
  const auto g = CoxGroup::build(parse_group_type("H4"));
  const auto table = embedded_table("h4_sigma");
  const auto lists = embedded_table("h4_cross_sections");
  const auto fibers = fibers_from_table(table, g);
  const auto tp = tau_prime(fibers);
  const auto tpp = tau_doubleprime(fibers);
  same_classes(g, tp, lists.set("tau_prime"), "tau'", out);
  same_classes(g, tpp, lists.set("tau_doubleprime"), "tau''", out);
  if (!sections_in_fibers(fibers, tp)) out.push_back("tau' leaves its fiber");
  if (!sections_in_fibers(fibers, tpp)) out.push_back("tau'' leaves its fiber");
  // Set arithmetic of the irreducibles.
  const auto all = as_set(table.cols);
  const auto star = as_set(table.set("irr_star"));
  const auto star2 = as_set(table.set("irr_star_star"));
  const auto image = as_set(table.set("image"));
  std::set<std::string> fibered;
  for (const auto& f : fibers) fibered.insert(f.irr);
  if (fibered != image) out.push_back("fibered irreducibles differ from the listed image");
  if (all.size() != 34 || image.size() != 22 || star.size() != 9 || star2.size() != 3)
    out.push_back("set sizes " + std::to_string(all.size()) + " = " + std::to_string(image.size()) + " + " +
                  std::to_string(star.size()) + " + " + std::to_string(star2.size()));
  std::set<std::string> joined = image;
  joined.insert(star.begin(), star.end());
  joined.insert(star2.begin(), star2.end());
  if (joined != all || image.size() + star.size() + star2.size() != all.size())
    out.push_back("image, Irr_* and Irr_** do not partition the irreducibles");
  if (g.classes().size() != all.size()) out.push_back("class count differs from irreducible count");
  for (const auto& e : table.entries) {
    if (e.value.is_zero() || has_negative_coefficient(e.value))
      out.push_back("recorded Psi(" + e.row + ", " + e.col + ") = " + to_text(e.value) + " is not a positive polynomial");
    require_integer_coefficients(e.value, "H4 strata table");
  }
  return out.empty();
}

// --- criterion 10 ----------------------------------------------------------

bool h3_dihedral_cross_sections(Details& out) {
  const auto g = CoxGroup::build(parse_group_type("H3"));
  const auto psi = psi_from_golden(embedded_table("h3_psi"), g);
  const auto fibers = fibers_from_report(psi, sigma_map(psi, Mode::noncrystallographic));
  const auto lists = embedded_table("h3_cross_sections");
  const auto tp = tau_prime(fibers);
  const auto tpp = tau_doubleprime(fibers);
  same_classes(g, tp, lists.set("tau_prime"), "H3 tau'", out);
  same_classes(g, tpp, lists.set("tau_doubleprime"), "H3 tau''", out);
  for (int p = 3; p <= 30; ++p) {
    const auto dpsi = psi_dihedral(p);
    const auto report = sigma_map(dpsi, Mode::noncrystallographic);
    const auto f = fibers_from_report(dpsi, report);
    const auto a = tau_prime(f);
    const auto b = tau_doubleprime(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::string inverse;
      for (const auto& c : report.classes)
        if (dpsi.irreps()[c.sigma].label == f[i].irr) inverse = dpsi.classes()[c.row].label;
      if (a[i].chosen.label != inverse || b[i].chosen.label != inverse)
        out.push_back("p=" + std::to_string(p) + " over " + f[i].irr + ": tau' " + a[i].chosen.label + ", tau'' " +
                      b[i].chosen.label + ", sigma^-1 " + inverse);
    }
  }
  return out.empty();
}

struct Criterion {
  const char* name;
  std::function<bool(Details&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"dihedral Ψ equals the printed matrices for p=5,7,8", dihedral_golden},
      {"p=3..30 Ψ closed forms", dihedral_closed_forms},
      {"p=3..30 Ψ coefficients are integers", integrality},
      {"p=3..30 strata map is the order-preserving bijection", dihedral_sigma},
      {"Hecke e-vector properties and regular-representation oracle", hecke_properties},
      {"Ψ trivial column from the Hecke algebra", trivial_column},
      {"B3 strata map (Weyl mode)", b3_extraction},
      {"H3 strata map (noncrystallographic mode)", h3_extraction},
      {"H4 cross-sections from the strata table", h4_cross_sections},
      {"H3 and dihedral cross-sections", h3_dihedral_cross_sections},
  };
  return list;
}

// Gaussian elimination over Q; solves m x = b for square nonsingular m.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) throw InvariantViolation("singular regular representation");
    std::swap(m[pivot], m[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

// Newton interpolation through (xs[i], ys[i]).
PolyU interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  PolyU out;
  for (std::size_t i = n; i-- > 0;) out = out * PolyU(std::vector<CycRat>{CycRat(-xs[i]), CycRat(1)}) + PolyU(CycRat(ys[i]));
  return out;
}

}  // namespace

std::string CheckResult::line() const {
  return "[" + std::to_string(id) + "] " + name + ": " + (pass ? "PASS" : "FAIL");
}

CheckResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(criteria().size())) throw NoMatch("no criterion " + std::to_string(id));
  const auto& c = criteria()[id - 1];
  CheckResult r;
  r.id = id;
  r.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.pass = c.run(r.details);
  } catch (const Error& e) {
    r.pass = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dihedral", "hecke", "b3", "h3", "h4", "cross-sections", "all"};
  return names;
}

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "dihedral") return {1, 2, 3, 4};
  if (suite == "hecke") return {5, 6};
  if (suite == "b3") return {7};
  if (suite == "h3") return {8};
  if (suite == "h4") return {9};
  if (suite == "cross-sections") return {9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw NoMatch("unknown suite '" + std::string(suite) + "'");
}

std::vector<PolyU> regular_rep_e_vector(const CoxGroup& g, Element w) {
  const std::size_t n = g.order();
  const int len = g.length(w);
  Word word = g.word(g.inverse(w));
  std::vector<Rational> xs, sign_scale;
  std::vector<std::vector<Rational>> values(n);
  for (int k = 0; k <= len; ++k) {
    const Rational u = k + 2;
    // Columns of T_{w^-1} acting on the left of the T-basis.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (Element y = 0; y < n; ++y) {
      std::vector<Rational> v(n);
      v[y] = 1;
      for (std::size_t i = word.size(); i-- > 0;) {
        const int s = word[i];
        std::vector<Rational> next(n);
        for (Element x = 0; x < n; ++x) {
          if (sgn(v[x]) == 0) continue;
          const Element sx = g.left(s, x);
          if (g.length(sx) > g.length(x)) {
            next[sx] += v[x];
          } else {
            next[x] += (u - 1) * v[x];
            next[sx] += u * v[x];
          }
        }
        v = std::move(next);
      }
      for (Element x = 0; x < n; ++x) m[x][y] = v[x];
    }
    std::vector<Rational> rhs(n);
    rhs[CoxGroup::identity()] = 1;
    auto x = solve(std::move(m), std::move(rhs));
    Rational scale = 1;
    for (int i = 0; i < len; ++i) scale *= -u;
    xs.push_back(u);
    for (Element y = 0; y < n; ++y) values[y].push_back(x[y] * scale);
  }
  std::vector<PolyU> out(n);
  for (Element y = 0; y < n; ++y) out[y] = interpolate(xs, values[y]);
  return out;
}

}  // namespace coxstrata
