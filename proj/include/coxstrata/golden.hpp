#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/psi_matrix.hpp"

namespace coxstrata {

/// A printed cell whose stored value differs from the printed text.
struct TypoNote {
  std::string row;
  std::string col;
  std::string printed;
  std::string justification;
  friend bool operator==(const TypoNote&, const TypoNote&) = default;
};

struct GoldenEntry {
  std::string row;
  std::string col;
  PolyU value;  // scalars are constant polynomials
  friend bool operator==(const GoldenEntry&, const GoldenEntry&) = default;
};

/// Line-based table:
///   table <name> / type <T> / rows <list> / cols <list> / kind poly|scalar|map|list
///   denominator <poly>          (optional; entries are numerators)
///   entry <row> <col> <value>   (missing cells are zero)
///   set <name> <list>
///   typo <row> <col> | <printed> | <justification>
///   provenance <text>
/// and '#' comments.
struct GoldenTable {
  std::string name;
  std::string type;
  std::string kind = "poly";
  std::string provenance;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::optional<PolyU> denominator;
  std::vector<GoldenEntry> entries;
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  std::vector<TypoNote> typos;

  PolyU at(std::string_view row, std::string_view col) const;
  const std::vector<std::string>& set(std::string_view name) const;
  bool has_set(std::string_view name) const;
  friend bool operator==(const GoldenTable&, const GoldenTable&) = default;
};

GoldenTable parse_table(std::string_view text);
std::string render_table(const GoldenTable& t);
GoldenTable load_table(const std::string& path);
void save_table(const GoldenTable& t, const std::string& path);

/// Names of the embedded tables, and the tables themselves.
const std::vector<std::string>& embedded_table_names();
std::string_view embedded_table_text(std::string_view name);
GoldenTable embedded_table(std::string_view name);

struct CellDiff {
  std::string row;
  std::string col;
  PolyU computed;
  PolyU golden;
};

/// Cells where psi and the table differ. Rows and columns are matched by
/// label; differing label sets raise LabelMismatch.
std::vector<CellDiff> diff(const PsiMatrix& psi, const GoldenTable& t);
/// Same for a plain matrix with explicit labels.
std::vector<CellDiff> diff(const Matrix<PolyU>& m, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols, const GoldenTable& t);

/// PsiMatrix for a full table of a type the coxeter module can build:
/// class metadata is recomputed from the resolved row labels, irreducible
/// metadata parsed from the d_b column labels.
PsiMatrix psi_from_golden(const GoldenTable& t, const CoxGroup& g);

}  // namespace coxstrata
