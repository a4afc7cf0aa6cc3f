#include "coxstrata/crosssec.hpp"

#include <algorithm>
#include <set>

#include "coxstrata/dihedral.hpp"
#include "coxstrata/errors.hpp"

namespace coxstrata {
namespace {

template <class BetterM, class BetterLen>
std::vector<Section> pick_sections(const FiberData& f, BetterM better_m, BetterLen better_len) {
  std::vector<Section> out;
  out.reserve(f.size());
  for (const auto& fiber : f) {
    if (fiber.classes.empty()) throw InvariantViolation("empty fiber over " + fiber.irr);
    int best_m = fiber.classes.front().m;
    for (const auto& c : fiber.classes)
      if (better_m(c.m, best_m)) best_m = c.m;
    int best_len = -1;
    for (const auto& c : fiber.classes)
      if (c.m == best_m && (best_len < 0 || better_len(c.min_length, best_len))) best_len = c.min_length;
    std::vector<const FiberEntry*> survivors;
    for (const auto& c : fiber.classes)
      if (c.m == best_m && c.min_length == best_len) survivors.push_back(&c);
    if (survivors.size() != 1) {
      std::vector<std::string> names;
      for (const auto* c : survivors) names.push_back(c->label);
      throw NonUnique(fiber.irr, names);
    }
    out.push_back({fiber.irr, *survivors.front()});
  }
  return out;
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + "]";
}

}  // namespace

FiberData fibers_from_report(const PsiMatrix& psi, const StrataReport& report) {
  FiberData out;
  for (std::size_t e : report.image) {
    Fiber fiber{psi.irreps()[e].label, {}};
    for (const auto& c : report.classes) {
      if (c.sigma != e) continue;
      const auto& meta = psi.classes()[c.row];
      fiber.classes.push_back({meta.label, meta.min_length, meta.m});
    }
    out.push_back(std::move(fiber));
  }
  return out;
}

FiberData fibers_from_table(const GoldenTable& t, const CoxGroup& g) {
  if (t.kind != "map") throw Error("table " + t.name + " is not a strata map");
  std::vector<int> seen(g.classes().size());
  FiberData out;
  for (const auto& col : t.cols) {
    Fiber fiber{col, {}};
    for (const auto& e : t.entries) {
      if (e.col != col) continue;
      const std::size_t k = g.resolve_index(e.row);
      ++seen[k];
      const auto& c = g.classes()[k];
      fiber.classes.push_back({e.row, c.min_length, c.m});
    }
    if (!fiber.classes.empty()) out.push_back(std::move(fiber));
  }
  for (const auto& e : t.entries)
    if (std::find(t.cols.begin(), t.cols.end(), e.col) == t.cols.end())
      throw ParseError("strata map entry for unknown irreducible '" + e.col + "'");
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != 1)
      throw InvariantViolation("class " + g.classes()[k].label + " appears " + std::to_string(seen[k]) +
                               " times in " + t.name);
  return out;
}

std::vector<Section> tau_prime(const FiberData& f) {
  return pick_sections(f, [](int a, int b) { return a < b; }, [](int a, int b) { return a > b; });
}

std::vector<Section> tau_doubleprime(const FiberData& f) {
  return pick_sections(f, [](int a, int b) { return a > b; }, [](int a, int b) { return a < b; });
}

FiberData fibers_for_type(const GroupType& type) {
  if (type.family == 'H') {
    const auto g = CoxGroup::build(type);
    return fibers_from_table(embedded_table(type.rank == 3 ? "h3_sigma" : "h4_sigma"), g);
  }
  if (type.family == 'I') {
    const auto psi = psi_dihedral(type.p);
    return fibers_from_report(psi, sigma_map(psi, Mode::noncrystallographic));
  }
  if (type.family == 'B' && type.rank == 3) {
    const auto g = CoxGroup::build(type);
    const auto psi = psi_from_golden(embedded_table("b3_psi"), g);
    return fibers_from_report(psi, sigma_map(psi, Mode::weyl));
  }
  throw UnsupportedType("no strata data for " + type.name());
}

std::vector<GroupType> product_decompose(std::string_view types) {
  std::vector<GroupType> out;
  auto rest = trim(types);
  // Commas inside "I2(p)" never occur, so a plain split suffices.
  while (!rest.empty()) {
    const auto sep = rest.find(',');
    out.push_back(parse_group_type(trim(rest.substr(0, sep))));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + 1);
  }
  if (out.empty()) throw ParseError("empty product");
  return out;
}

FiberData product_fibers(const std::vector<FiberData>& factors) {
  if (factors.empty()) throw Error("product of no factors");
  if (factors.size() == 1) return factors.front();
  // Odometer over the irreducibles of each factor, then over the classes.
  FiberData out;
  std::vector<std::size_t> idx(factors.size());
  while (true) {
    std::vector<std::string> irr;
    std::vector<const Fiber*> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      parts.push_back(&factors[i][idx[i]]);
      irr.push_back(parts.back()->irr);
    }
    Fiber fiber{tuple_label(irr), {}};
    std::vector<std::size_t> cls(factors.size());
    while (true) {
      std::vector<std::string> names;
      FiberEntry entry;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& c = parts[i]->classes[cls[i]];
        names.push_back(c.label);
        entry.min_length += c.min_length;
        entry.m += c.m;
      }
      entry.label = tuple_label(names);
      fiber.classes.push_back(std::move(entry));
      std::size_t i = parts.size();
      while (i-- > 0) {
        if (++cls[i] < parts[i]->classes.size()) break;
        cls[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    out.push_back(std::move(fiber));
    std::size_t i = factors.size();
    while (i-- > 0) {
      if (++idx[i] < factors[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool sections_in_fibers(const FiberData& f, const std::vector<Section>& s) {
  if (f.size() != s.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].irr != s[i].irr) return false;
    if (std::find(f[i].classes.begin(), f[i].classes.end(), s[i].chosen) == f[i].classes.end()) return false;
  }
  return true;
}

}  // namespace coxstrata
