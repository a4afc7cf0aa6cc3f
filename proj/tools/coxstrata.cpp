#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "coxstrata/crosssec.hpp"
#include "coxstrata/dihedral.hpp"
#include "coxstrata/errors.hpp"
#include "coxstrata/golden.hpp"
#include "coxstrata/hecke.hpp"
#include "coxstrata/strata.hpp"
#include "coxstrata/verify.hpp"

using namespace coxstrata;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct TypeArgs {
  std::string type;
  int p = 0;
};

void add_type_options(CLI::App* cmd, TypeArgs& t, bool required = true) {
  auto* opt = cmd->add_option("--type", t.type, "Coxeter type: A1..A3, B2, B3, H3, H4, I2");
  if (required) opt->required();
  cmd->add_option("--p", t.p, "dihedral order, required for I2");
}

GroupType resolve_type(const TypeArgs& t) {
  const bool dihedral = t.type.rfind("I2", 0) == 0;
  if (dihedral && t.type == "I2" && t.p == 0) throw UsageError("--p is required for type I2");
  if (!dihedral && t.p != 0) throw UsageError("--p only applies to type I2");
  return parse_group_type(t.type, t.p);
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json") throw UsageError("--format must be text or json");
}

std::string table_for(const GroupType& type) {
  if (type.family == 'B' && type.rank == 3) return "b3_psi";
  if (type.family == 'H' && type.rank == 3) return "h3_psi";
  return {};
}

// Psi for a type: computed for I2, the embedded table for B3/H3, or a file.
PsiMatrix load_psi(const GroupType& type, const std::string& file) {
  if (!file.empty()) {
    const auto g = CoxGroup::build(type);
    const auto t = load_table(file);
    if (!t.type.empty() && t.type != type.name())
      throw UsageError("table type " + t.type + " does not match --type " + type.name());
    return psi_from_golden(t, g);
  }
  if (type.family == 'I') return psi_dihedral(type.p);
  const auto name = table_for(type);
  if (name.empty()) throw UnsupportedType("no Psi matrix available for " + type.name() + "; pass --psi-file");
  return psi_from_golden(embedded_table(name), CoxGroup::build(type));
}

json psi_json(const PsiMatrix& psi) {
  json rows = json::array();
  for (std::size_t i = 0; i < psi.classes().size(); ++i) {
    json cells = json::array();
    for (std::size_t j = 0; j < psi.irreps().size(); ++j) cells.push_back(to_text(psi.entry(i, j)));
    rows.push_back(std::move(cells));
  }
  json classes = json::array(), irreps = json::array();
  for (const auto& c : psi.classes()) classes.push_back(c.label);
  for (const auto& e : psi.irreps()) irreps.push_back(e.label);
  return {{"type", psi.type()}, {"classes", classes}, {"irreducibles", irreps}, {"entries", rows}};
}

void print_psi_text(const PsiMatrix& psi, std::ostream& out) {
  out << "class";
  for (const auto& e : psi.irreps()) out << " | " << e.label;
  out << "\n";
  for (std::size_t i = 0; i < psi.classes().size(); ++i) {
    out << psi.classes()[i].label;
    for (std::size_t j = 0; j < psi.irreps().size(); ++j) out << " | " << to_text(psi.entry(i, j));
    out << "\n";
  }
}

int cmd_group(const TypeArgs& args, const std::string& format) {
  const auto g = CoxGroup::build(resolve_type(args));
  if (format == "json") {
    json classes = json::array();
    for (const auto& c : g.classes())
      classes.push_back({{"label", c.label},
                         {"size", c.size()},
                         {"min_length", c.min_length},
                         {"m", c.m},
                         {"representative", word_label(c.rep_word)}});
    std::cout << json{{"type", g.type().name()}, {"order", g.order()}, {"classes", classes}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << g.type().name() << " order " << g.order() << ", " << g.classes().size() << " classes\n";
  for (const auto& c : g.classes())
    std::cout << c.label << " | size " << c.size() << " | length " << c.min_length << " | m " << c.m << " | "
              << word_label(c.rep_word) << "\n";
  return kOk;
}

int cmd_psi(const TypeArgs& args, const std::string& file, const std::string& format, bool check) {
  const auto type = resolve_type(args);
  const auto psi = load_psi(type, file);
  if (format == "json")
    std::cout << psi_json(psi).dump(2) << "\n";
  else
    print_psi_text(psi, std::cout);
  if (!check) return kOk;
  std::vector<std::string> problems;
  if (type.family == 'I') {
    const auto closed = dihedral_psi_closed_form(type.p);
    for (std::size_t i = 0; i < closed.rows(); ++i)
      for (std::size_t j = 0; j < closed.cols(); ++j)
        if (!(closed(i, j) == psi.entry(i, j)))
          problems.push_back("(" + psi.classes()[i].label + ", " + psi.irreps()[j].label + ") closed form " +
                             to_text(closed(i, j)));
    if (!(multiply<PolyU>(dihedral_a(type.p), dihedral_a_prime(type.p)) == dihedral_aa_closed_form(type.p)))
      problems.push_back("AA' differs from its closed form");
  } else {
    const auto g = CoxGroup::build(type);
    for (std::size_t i = 0; i < psi.classes().size(); ++i) {
      const auto col = psi_trivial_column(g, g.resolve_label(psi.classes()[i].label));
      if (!(col == psi.entry(i, psi.trivial_column())))
        problems.push_back("(" + psi.classes()[i].label + ", 1_0) Hecke algebra gives " + to_text(col));
    }
  }
  for (const auto& p : problems) std::cerr << "mismatch " << p << "\n";
  std::cerr << "check: " << (problems.empty() ? "PASS" : "FAIL") << "\n";
  return problems.empty() ? kOk : kFailed;
}

json sigma_from_table(const GroupType& type, std::ostream& text, bool as_json) {
  // Partial mode: the map and sets come from the strata table.
  const auto g = CoxGroup::build(type);
  const auto t = embedded_table("h4_sigma");
  json map = json::array(), conj = json::array();
  for (const auto& e : t.entries) {
    const auto& c = g.resolve_label(e.row);
    const int exponent = c.min_length + c.m - g.rank();
    const bool holds = exponent % 2 == 0 && e.value == PolyU::monomial(CycRat(1), exponent / 2);
    map.push_back({{"class", e.row}, {"irr", e.col}, {"psi", to_text(e.value)}});
    conj.push_back({{"class", e.row}, {"holds", holds}});
    if (!as_json) text << e.row << " -> " << e.col << " | " << to_text(e.value) << " | monomial " << (holds ? "yes" : "no") << "\n";
  }
  return {{"type", type.name()},
          {"irr_star", t.set("irr_star")},
          {"irr_star_star", t.set("irr_star_star")},
          {"map", map},
          {"image", t.set("image")},
          {"conj33c", conj}};
}

int cmd_sigma(const TypeArgs& args, const std::string& file, std::string mode, const std::string& format) {
  const auto type = resolve_type(args);
  const bool as_json = format == "json";
  if (mode.empty()) mode = (type.family == 'H' || type.family == 'I') ? "noncrys" : "weyl";
  if (mode != "weyl" && mode != "noncrys") throw UsageError("--mode must be weyl or noncrys");
  std::ostringstream text;
  json doc;
  if (type.family == 'H' && type.rank == 4 && file.empty()) {
    text << "H4 partial mode: map read from the strata table\n";
    doc = sigma_from_table(type, text, as_json);
  } else {
    const auto psi = load_psi(type, file);
    const auto report = sigma_map(psi, mode == "weyl" ? Mode::weyl : Mode::noncrystallographic);
    auto labels = [&](const std::vector<std::size_t>& cols) {
      json out = json::array();
      for (auto c : cols) out.push_back(psi.irreps()[c].label);
      return out;
    };
    json map = json::array(), conj = json::array();
    for (const auto& c : report.classes) {
      const auto& cl = psi.classes()[c.row].label;
      const auto& irr = psi.irreps()[c.sigma].label;
      map.push_back({{"class", cl}, {"irr", irr}, {"psi", to_text(c.psi)}});
      conj.push_back({{"class", cl}, {"holds", c.monomial}});
      text << cl << " -> " << irr << " | " << to_text(c.psi) << " | monomial " << (c.monomial ? "yes" : "no") << "\n";
    }
    doc = {{"type", psi.type()},           {"irr_star", labels(report.irr_star)},
           {"irr_star_star", labels(report.irr_star_star)}, {"map", map},
           {"image", labels(report.image)}, {"conj33c", conj}};
    const auto image = image_report(psi, report);
    const char* rel = image.relation == ImageRelation::equal           ? "equal"
                      : image.relation == ImageRelation::strict_subset ? "strict subset"
                                                                       : "other";
    text << "image vs candidates: " << rel << "\n";
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  auto list = [](const json& a) {
    std::string out;
    for (const auto& x : a) out += (out.empty() ? "" : ",") + x.get<std::string>();
    return out;
  };
  std::cout << "Irr_* = {" << list(doc["irr_star"]) << "}\n"
            << "Irr_** = {" << list(doc["irr_star_star"]) << "}\n"
            << text.str() << "image = {" << list(doc["image"]) << "}\n";
  return kOk;
}

int cmd_hecke_column(const TypeArgs& args, const std::string& format) {
  const auto g = CoxGroup::build(resolve_type(args));
  json rows = json::array();
  for (const auto& c : g.classes()) {
    const auto col = psi_trivial_column(g, c);
    if (format == "json")
      rows.push_back({{"class", c.label}, {"psi", to_text(col)}});
    else
      std::cout << c.label << " | " << to_text(col) << "\n";
  }
  if (format == "json") std::cout << json{{"type", g.type().name()}, {"column", rows}}.dump(2) << "\n";
  return kOk;
}

int cmd_cross_section(const TypeArgs& args, const std::string& product, const std::string& format) {
  std::vector<FiberData> factors;
  std::string name;
  if (!product.empty()) {
    if (!args.type.empty()) throw UsageError("give either --type or --product");
    for (const auto& t : product_decompose(product)) {
      factors.push_back(fibers_for_type(t));
      name += (name.empty() ? "" : " x ") + t.name();
    }
  } else {
    if (args.type.empty()) throw UsageError("--type or --product is required");
    const auto t = resolve_type(args);
    factors.push_back(fibers_for_type(t));
    name = t.name();
  }
  const auto fibers = product_fibers(factors);
  const auto a = tau_prime(fibers);
  const auto b = tau_doubleprime(fibers);
  if (format == "json") {
    json rows = json::array();
    auto entry = [](const FiberEntry& e) { return json{{"class", e.label}, {"length", e.min_length}, {"m", e.m}}; };
    for (std::size_t i = 0; i < fibers.size(); ++i)
      rows.push_back({{"irr", fibers[i].irr}, {"tau_prime", entry(a[i].chosen)}, {"tau_doubleprime", entry(b[i].chosen)}});
    std::cout << json{{"type", name}, {"sections", rows}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << name << ": " << fibers.size() << " irreducibles in the image\n";
  std::cout << "irr | tau' (|C|, m) | tau'' (|C|, m)\n";
  for (std::size_t i = 0; i < fibers.size(); ++i)
    std::cout << fibers[i].irr << " | " << a[i].chosen.label << " (" << a[i].chosen.min_length << ", " << a[i].chosen.m
              << ") | " << b[i].chosen.label << " (" << b[i].chosen.min_length << ", " << b[i].chosen.m << ")\n";
  return kOk;
}

int cmd_verify(const std::string& suite, bool verbose) {
  bool all_pass = true;
  for (int id : suite_criteria(suite)) {
    const auto r = run_criterion(id);
    std::cout << r.line() << "\n";
    if (!r.pass || verbose)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strata of finite Coxeter groups from the Psi matrix"};
  app.require_subcommand(1);

  TypeArgs type;
  std::string format = "text", psi_file, mode, product, suite = "all";
  bool check = false, verbose = false;

  auto* group = app.add_subcommand("group", "conjugacy classes with length and m");
  add_type_options(group, type);
  group->add_option("--format", format);

  auto* psi = app.add_subcommand("psi", "the matrix Psi = A A' A''");
  add_type_options(psi, type);
  psi->add_option("--psi-file", psi_file, "table file to load instead of the built-in data");
  psi->add_option("--format", format);
  psi->add_flag("--check", check, "compare against closed forms or the Hecke algebra column");

  auto* sigma = app.add_subcommand("sigma", "the strata map from classes to irreducibles");
  add_type_options(sigma, type);
  sigma->add_option("--psi-file", psi_file);
  sigma->add_option("--mode", mode, "weyl or noncrys");
  sigma->add_option("--format", format);

  auto* hecke = app.add_subcommand("hecke-column", "trivial column of Psi from the Hecke algebra");
  add_type_options(hecke, type);
  hecke->add_option("--format", format);

  auto* cross = app.add_subcommand("cross-section", "the two cross-sections of the strata map");
  add_type_options(cross, type, false);
  cross->add_option("--product", product, "comma-separated factor types, e.g. H3,I2(7)");
  cross->add_option("--format", format);

  auto* verify = app.add_subcommand("verify", "acceptance checks");
  verify->add_option("--suite", suite, "dihedral, hecke, b3, h3, h4, cross-sections or all");
  verify->add_flag("--verbose", verbose, "print notes for passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    check_format(format);
    if (*group) return cmd_group(type, format);
    if (*psi) return cmd_psi(type, psi_file, format, check);
    if (*sigma) return cmd_sigma(type, psi_file, mode, format);
    if (*hecke) return cmd_hecke_column(type, format);
    if (*cross) return cmd_cross_section(type, product, format);
    if (*verify) return cmd_verify(suite, verbose);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NoMatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
