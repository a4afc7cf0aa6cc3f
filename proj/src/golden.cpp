#include "coxstrata/golden.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "coxstrata/errors.hpp"

namespace coxstrata {
namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  auto rest = trim(text);
  if (rest.empty()) return out;
  while (true) {
    const auto sep = rest.find(',');
    out.emplace_back(trim(rest.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + 1);
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

// Splits off the first blank-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  const auto sp = rest.find_first_of(" \t");
  auto tok = rest.substr(0, sp);
  rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp + 1);
  return tok;
}

std::string value_text(const GoldenTable& t, const PolyU& v) {
  if (t.kind == "scalar") return v.is_zero() ? "0" : v.coefficient(0).to_text();
  return to_text(v);
}

}  // namespace

PolyU GoldenTable::at(std::string_view row, std::string_view col) const {
  for (const auto& e : entries)
    if (e.row == row && e.col == col) return e.value;
  return {};
}

bool GoldenTable::has_set(std::string_view n) const {
  for (const auto& [key, items] : sets)
    if (key == n) return true;
  return false;
}

const std::vector<std::string>& GoldenTable::set(std::string_view n) const {
  for (const auto& [key, items] : sets)
    if (key == n) return items;
  throw NoMatch("table " + name + " has no set '" + std::string(n) + "'");
}

GoldenTable parse_table(std::string_view text) {
  GoldenTable t;
  std::set<std::pair<std::string, std::string>> seen;
  int line_no = 0;
  bool have_name = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto rest = line;
    const auto key = next_token(rest);
    rest = trim(rest);
    try {
      if (key == "table") {
        t.name = std::string(rest);
        have_name = true;
      } else if (key == "type") {
        t.type = std::string(rest);
      } else if (key == "kind") {
        if (rest != "poly" && rest != "scalar" && rest != "map" && rest != "list")
          throw ParseError("unknown table kind '" + std::string(rest) + "'", line_no);
        t.kind = std::string(rest);
      } else if (key == "provenance") {
        t.provenance = std::string(rest);
      } else if (key == "rows") {
        t.rows = split_list(rest);
      } else if (key == "cols") {
        t.cols = split_list(rest);
      } else if (key == "denominator") {
        t.denominator = parse_poly(rest);
      } else if (key == "entry") {
        GoldenEntry e;
        e.row = std::string(next_token(rest));
        e.col = std::string(next_token(rest));
        rest = trim(rest);
        if (e.row.empty() || e.col.empty() || rest.empty()) throw ParseError("entry needs row, column and value", line_no);
        if (std::find(t.rows.begin(), t.rows.end(), e.row) == t.rows.end())
          throw ParseError("unknown row label '" + e.row + "'", line_no);
        if (t.kind != "map" && std::find(t.cols.begin(), t.cols.end(), e.col) == t.cols.end())
          throw ParseError("unknown column label '" + e.col + "'", line_no);
        if (!seen.emplace(e.row, e.col).second) throw ParseError("duplicate entry", line_no);
        e.value = t.kind == "scalar" ? PolyU(parse_cyc(rest)) : parse_poly(rest);
        t.entries.push_back(std::move(e));
      } else if (key == "set") {
        const auto n = next_token(rest);
        if (n.empty()) throw ParseError("set needs a name", line_no);
        t.sets.emplace_back(std::string(n), split_list(rest));
      } else if (key == "typo") {
        TypoNote note;
        note.row = std::string(next_token(rest));
        note.col = std::string(next_token(rest));
        rest = trim(rest);
        if (rest.empty() || rest.front() != '|') throw ParseError("typo needs '| printed | justification'", line_no);
        rest.remove_prefix(1);
        const auto bar = rest.find('|');
        if (bar == std::string_view::npos) throw ParseError("typo needs '| printed | justification'", line_no);
        note.printed = std::string(trim(rest.substr(0, bar)));
        note.justification = std::string(trim(rest.substr(bar + 1)));
        if (note.justification.empty()) throw ParseError("typo annotation without justification", line_no);
        t.typos.push_back(std::move(note));
      } else {
        throw ParseError("unknown directive '" + std::string(key) + "'", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line()) throw;
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_name) throw ParseError("table has no name", 0);
  return t;
}

std::string render_table(const GoldenTable& t) {
  std::ostringstream out;
  out << "table " << t.name << "\n";
  if (!t.type.empty()) out << "type " << t.type << "\n";
  out << "kind " << t.kind << "\n";
  if (!t.provenance.empty()) out << "provenance " << t.provenance << "\n";
  if (!t.rows.empty()) out << "rows " << join(t.rows) << "\n";
  if (!t.cols.empty()) out << "cols " << join(t.cols) << "\n";
  if (t.denominator) out << "denominator " << to_text(*t.denominator) << "\n";
  for (const auto& e : t.entries) out << "entry " << e.row << " " << e.col << " " << value_text(t, e.value) << "\n";
  for (const auto& [n, items] : t.sets) out << "set " << n << " " << join(items) << "\n";
  for (const auto& n : t.typos)
    out << "typo " << n.row << " " << n.col << " | " << n.printed << " | " << n.justification << "\n";
  return out.str();
}

GoldenTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void save_table(const GoldenTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << render_table(t);
}

GoldenTable embedded_table(std::string_view name) { return parse_table(embedded_table_text(name)); }

std::vector<CellDiff> diff(const Matrix<PolyU>& m, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols, const GoldenTable& t) {
  auto same_set = [](std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  if (!same_set(rows, t.rows) || !same_set(cols, t.cols))
    throw LabelMismatch("labels of " + t.name + " do not match the computed matrix");
  std::vector<CellDiff> out;
  for (const auto& r : t.rows) {
    const auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), r) - rows.begin());
    for (const auto& c : t.cols) {
      const auto j = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), c) - cols.begin());
      PolyU golden = t.at(r, c);
      if (!(m(i, j) == golden)) out.push_back({r, c, m(i, j), std::move(golden)});
    }
  }
  return out;
}

std::vector<CellDiff> diff(const PsiMatrix& psi, const GoldenTable& t) {
  std::vector<std::string> rows, cols;
  for (const auto& c : psi.classes()) rows.push_back(c.label);
  for (const auto& e : psi.irreps()) cols.push_back(e.label);
  return diff(psi.entries(), rows, cols, t);
}

PsiMatrix psi_from_golden(const GoldenTable& t, const CoxGroup& g) {
  if (t.kind != "poly" || t.denominator) throw Error("table " + t.name + " is not a plain polynomial matrix");
  std::vector<ClassMeta> classes;
  std::set<std::size_t> used;
  for (const auto& r : t.rows) {
    if (!used.insert(g.resolve_index(r)).second)
      throw InvariantViolation("row label '" + r + "' names a class already present in " + t.name);
    ClassMeta meta = class_meta(g.resolve_label(r));
    meta.label = r;
    classes.push_back(std::move(meta));
  }
  std::vector<IrrInfo> irreps;
  for (const auto& c : t.cols) irreps.push_back(IrrInfo::parse(c));
  Matrix<PolyU> m(t.rows.size(), t.cols.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.cols.size(); ++j) m(i, j) = t.at(t.rows[i], t.cols[j]);
  return PsiMatrix(t.type, g.rank(), std::move(classes), std::move(irreps), std::move(m));
}

}  // namespace coxstrata
