#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxstrata/cyclotomic.hpp"
#include "coxstrata/matrix.hpp"

namespace coxstrata {

/// Irreducible finite Coxeter type: family letter 'A', 'B', 'H' or 'I'
/// (dihedral, with p = order of the braid relation).
struct GroupType {
  char family = 'A';
  int rank = 1;
  int p = 0;

  /// "A3", "B3", "H4", "I2(7)".
  std::string name() const;
  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Accepts "A1".."A3", "B2", "B3", "H3", "H4", "I2(p)"; a bare "I2" takes
/// the separate p argument.
GroupType parse_group_type(std::string_view text, int p = 0);

using Element = std::uint32_t;
using Word = std::vector<int>;  // 0-based generator indices

struct ConjClass {
  std::string label;
  std::vector<Element> members;  // ascending
  int min_length = 0;
  Element representative = 0;  // lexicographically least reduced word among minimal-length members
  Word rep_word;
  int m = 0;  // fixed-space dimension on the reflection representation
  bool elliptic = false;

  std::size_t size() const { return members.size(); }
};

class CoxGroup {
 public:
  static CoxGroup build(const GroupType& type);

  const GroupType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  /// Conductor of the cyclotomic field holding the reflection matrices.
  int conductor() const noexcept { return conductor_; }
  std::size_t order() const noexcept { return length_.size(); }
  const Matrix<int>& coxeter_matrix() const noexcept { return coxeter_; }

  static constexpr Element identity() { return 0; }
  int length(Element w) const { return length_[w]; }
  int max_length() const { return length_.back(); }
  /// Lexicographically least reduced word.
  const Word& word(Element w) const { return words_[w]; }
  Element left(int s, Element w) const { return left_[s * order() + w]; }
  Element right(Element w, int s) const { return right_[s * order() + w]; }
  const std::vector<Element>& left_table(int s) const { return left_rows_[s]; }

  Element from_word(const Word& word) const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const;
  Element power(Element w, int e) const;

  /// Matrix of w on the span of the simple roots (columns are images).
  Matrix<CycRat> reflection_matrix(Element w) const;
  int fixed_space_dim(Element w) const;

  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element w) const { return class_of_[w]; }
  std::size_t identity_class() const { return class_of_[identity()]; }

  /// Resolves class labels: "c_n", "c'_n", "(i1...ik)", "(i1...ik)^m",
  /// "(-)", the dihedral names and the B3 bipartition names. In strict mode
  /// a bare "c_n" naming several classes raises Ambiguous.
  const ConjClass& resolve_label(std::string_view label, bool strict = false) const;
  std::size_t resolve_index(std::string_view label, bool strict = false) const;

 private:
  CoxGroup() = default;
  void enumerate(const Matrix<CycRat>& cartan);
  void build_classes();
  void assign_labels();

  GroupType type_;
  int conductor_ = 1;
  Matrix<int> coxeter_;
  std::vector<std::vector<CycRat>> roots_;
  std::vector<std::vector<std::uint16_t>> simple_images_;  // per element, root index of w(alpha_j)
  std::vector<int> length_;
  std::vector<Word> words_;
  std::vector<Element> left_;
  std::vector<Element> right_;
  std::vector<std::vector<Element>> left_rows_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Rank of a matrix over a cyclotomic field (Bareiss elimination).
int matrix_rank(Matrix<CycRat> m);

/// Text form of a word with 1-based letters, "(-)" for the empty word.
std::string word_label(const Word& w);

}  // namespace coxstrata
