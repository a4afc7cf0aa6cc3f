#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/golden.hpp"
#include "coxstrata/strata.hpp"

namespace coxstrata {

struct FiberEntry {
  std::string label;
  int min_length = 0;
  int m = 0;
  friend bool operator==(const FiberEntry&, const FiberEntry&) = default;
};

/// Classes mapped to one irreducible by the strata map.
struct Fiber {
  std::string irr;
  std::vector<FiberEntry> classes;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Fibers in irreducible order; only irreducibles in the image appear.
using FiberData = std::vector<Fiber>;

FiberData fibers_from_report(const PsiMatrix& psi, const StrataReport& report);

/// Fibers of a "map" golden table. Lengths and m come from the classes the
/// row labels resolve to; the rows must cover every class of g exactly once.
FiberData fibers_from_table(const GoldenTable& t, const CoxGroup& g);

struct Section {
  std::string irr;
  FiberEntry chosen;
};

/// Minimal m, then maximal length, in each fiber. NonUnique on ties.
std::vector<Section> tau_prime(const FiberData& f);
/// Maximal m, then minimal length, in each fiber. NonUnique on ties.
std::vector<Section> tau_doubleprime(const FiberData& f);

/// Fibers for an embedded type: golden strata tables for H3 and H4, the
/// computed map for B3 and I2(p). UnsupportedType otherwise.
FiberData fibers_for_type(const GroupType& type);

/// Parses "H3,I2(7)" into factor types.
std::vector<GroupType> product_decompose(std::string_view types);

/// Fibers of a product: irreducibles and classes are tuples "[x,y]", m and
/// length add. A single factor is returned unchanged.
FiberData product_fibers(const std::vector<FiberData>& factors);

/// True iff every section lies in the fiber of its own irreducible.
bool sections_in_fibers(const FiberData& f, const std::vector<Section>& s);

}  // namespace coxstrata
