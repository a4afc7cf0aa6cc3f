#include "coxstrata/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "coxstrata/errors.hpp"

namespace coxstrata {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t expected_order(const GroupType& t) {
  std::size_t fact = 1;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= t.rank + 1; ++i) fact *= i;
      return fact;
    case 'B':
      for (int i = 2; i <= t.rank; ++i) fact *= i;
      return fact << t.rank;
    case 'H':
      return t.rank == 3 ? 120 : 14400;
    default:
      return 2 * static_cast<std::size_t>(t.p);
  }
}

// 2 + zeta_n + zeta_n^-1 = 4cos^2(pi/n).
CycRat four_cos_squared(int n) { return CycRat(2) + CycRat::zeta(n, 1) + CycRat::zeta(n, -1); }

// a(i,j) with s_i(alpha_j) = alpha_j - a(i,j) alpha_i; a(i,j) a(j,i) = 4cos^2(pi/m_ij).
Matrix<CycRat> cartan_matrix(const GroupType& t, const Matrix<int>& cox, int conductor) {
  const int n = t.rank;
  Matrix<CycRat> a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = CycRat::rational(2, conductor);
  for (int i = 0; i + 1 < n; ++i) {
    const int m = cox(i, i + 1);
    if (m == 3) {
      a(i, i + 1) = CycRat::rational(-1, conductor);
      a(i + 1, i) = CycRat::rational(-1, conductor);
    } else if (m == 4) {
      a(i, i + 1) = CycRat::rational(-2, conductor);
      a(i + 1, i) = CycRat::rational(-1, conductor);
    } else {
      a(i, i + 1) = CycRat::rational(-1, conductor);
      a(i + 1, i) = -four_cos_squared(m);
    }
  }
  return a;
}

std::uint64_t pack(const std::vector<std::uint16_t>& images) {
  std::uint64_t key = 0;
  for (auto r : images) key = (key << 16) | r;
  return key;
}

const std::map<std::string, std::string, std::less<>>& b3_words() {
  // Bipartition names to representative words (s1 is the sign change).
  static const std::map<std::string, std::string, std::less<>> table{
      {"111", ""},     {"11.1", "1"},     {"21.", "2"},         {"1.2", "12"},
      {"2.1", "13"},   {"3.", "23"},      {".3", "123"},        {"1.11", "1212"},
      {".21", "1232123"}, {".111", "121232123"},
  };
  return table;
}

const std::vector<std::string>& preferred_names(const GroupType& t) {
  static const std::vector<std::string> h3{"(12)", "(23)", "(13)", "(1212)", "(1)", "(-)"};
  static const std::vector<std::string> h4{"(123)", "(12123)", "(124)", "(243)", "(12)",   "(123)^3", "(134)",
                                           "(23)",  "(12124)", "(123)^5", "(1212)", "(13)", "(1)",     "(-)"};
  static const std::vector<std::string> none;
  if (t.family == 'H') return t.rank == 3 ? h3 : h4;
  return none;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

std::string GroupType::name() const {
  if (family == 'I') return "I2(" + std::to_string(p) + ")";
  return std::string(1, family) + std::to_string(rank);
}

GroupType parse_group_type(std::string_view text, int p) {
  const auto body = trim(text);
  if (body.rfind("I2", 0) == 0) {
    int q = p;
    if (body.size() > 2) {
      if (body.size() < 5 || body[2] != '(' || body.back() != ')' || !parse_int(body.substr(3, body.size() - 4), q))
        throw UnsupportedType("malformed dihedral type '" + std::string(body) + "'");
    }
    if (q < 3) throw UnsupportedType("dihedral type needs p >= 3");
    return {'I', 2, q};
  }
  static const std::vector<std::string> known{"A1", "A2", "A3", "B2", "B3", "H3", "H4"};
  if (std::find(known.begin(), known.end(), body) == known.end())
    throw UnsupportedType("unsupported Coxeter type '" + std::string(body) + "'");
  return {body[0], body[1] - '0', 0};
}

std::string word_label(const Word& w) {
  if (w.empty()) return "(-)";
  std::string out = "(";
  for (int s : w) out += std::to_string(s + 1);
  return out + ")";
}

int matrix_rank(Matrix<CycRat> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  CycRat prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const CycRat inv_prev = prev.inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) * inv_prev;
      m(i, c) = CycRat();
    }
    prev = m(rank, c);
    ++rank;
  }
  return static_cast<int>(rank);
}

CoxGroup CoxGroup::build(const GroupType& type) {
  if (type.family == 'I' ? type.p < 3 : (type.rank < 1 || type.rank > 4))
    throw UnsupportedType("unsupported Coxeter type " + type.name());
  CoxGroup g;
  g.type_ = type;
  const int n = type.rank;
  g.coxeter_ = Matrix<int>(n, n, 2);
  for (int i = 0; i < n; ++i) g.coxeter_(i, i) = 1;
  auto link = [&](int i, int m) { g.coxeter_(i, i + 1) = g.coxeter_(i + 1, i) = m; };
  switch (type.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, 3);
      break;
    case 'B':
      link(0, 4);
      for (int i = 1; i + 1 < n; ++i) link(i, 3);
      break;
    case 'H':
      if (n != 3 && n != 4) throw UnsupportedType("type H needs rank 3 or 4");
      link(0, 5);
      for (int i = 1; i + 1 < n; ++i) link(i, 3);
      g.conductor_ = 5;
      break;
    case 'I':
      link(0, type.p);
      g.conductor_ = type.p;
      break;
    default:
      throw UnsupportedType("unsupported Coxeter family");
  }
  g.enumerate(cartan_matrix(type, g.coxeter_, g.conductor_));
  if (g.order() != expected_order(type))
    throw InvariantViolation(type.name() + ": enumerated " + std::to_string(g.order()) + " elements, expected " +
                             std::to_string(expected_order(type)));
  g.build_classes();
  g.assign_labels();
  return g;
}

void CoxGroup::enumerate(const Matrix<CycRat>& a) {
  const int n = rank();
  // Root orbit of the simple roots.
  for (int i = 0; i < n; ++i) {
    std::vector<CycRat> e(n, CycRat::rational(0, conductor_));
    e[i] = CycRat::rational(1, conductor_);
    roots_.push_back(std::move(e));
  }
  std::vector<std::vector<std::uint16_t>> perm(n);
  auto root_index = [&](const std::vector<CycRat>& x) {
    for (std::size_t r = 0; r < roots_.size(); ++r)
      if (roots_[r] == x) return r;
    return kNone;
  };
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      std::vector<CycRat> x = roots_[r];
      CycRat pairing;
      for (int j = 0; j < n; ++j) pairing += a(i, j) * x[j];
      x[i] -= pairing;
      std::size_t idx = root_index(x);
      if (idx == kNone) {
        idx = roots_.size();
        roots_.push_back(std::move(x));
        if (roots_.size() > 65535) throw InvariantViolation("root orbit is not finite");
      }
      perm[i].resize(roots_.size());
      perm[i][r] = static_cast<std::uint16_t>(idx);
    }
  }

  // Breadth-first enumeration by left multiplication; depth is length.
  const std::size_t nroots = roots_.size();
  std::vector<std::vector<std::uint16_t>> elems;
  std::unordered_map<std::uint64_t, Element> index;
  auto images = [&](const std::vector<std::uint16_t>& p) {
    std::vector<std::uint16_t> out(p.begin(), p.begin() + n);
    return out;
  };
  std::vector<std::uint16_t> id(nroots);
  for (std::size_t r = 0; r < nroots; ++r) id[r] = static_cast<std::uint16_t>(r);
  elems.push_back(id);
  length_.push_back(0);
  index.emplace(pack(images(id)), 0);
  std::vector<std::vector<Element>> left(n);
  for (std::size_t w = 0; w < elems.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      std::vector<std::uint16_t> next(nroots);
      for (std::size_t r = 0; r < nroots; ++r) next[r] = perm[s][elems[w][r]];
      const auto key = pack(images(next));
      auto [it, inserted] = index.emplace(key, static_cast<Element>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(next));
        length_.push_back(length_[w] + 1);
        if (elems.size() > 200000) throw InvariantViolation("group enumeration exceeded the size limit");
      }
      left[s].resize(elems.size());
      left[s][w] = it->second;
    }
  }
  const std::size_t order = elems.size();
  left_.assign(n * order, 0);
  right_.assign(n * order, 0);
  left_rows_.assign(n, {});
  simple_images_.resize(order);
  for (std::size_t w = 0; w < order; ++w) simple_images_[w] = images(elems[w]);
  for (int s = 0; s < n; ++s) {
    left[s].resize(order);
    left_rows_[s] = left[s];
    for (std::size_t w = 0; w < order; ++w) {
      left_[s * order + w] = left[s][w];
      std::vector<std::uint16_t> img(n);
      for (int j = 0; j < n; ++j) img[j] = elems[w][perm[s][j]];
      right_[s * order + w] = index.at(pack(img));
    }
  }
  words_.resize(order);
  for (std::size_t w = 1; w < order; ++w) {
    for (int s = 0; s < n; ++s) {
      const Element sw = left_[s * order + w];
      if (length_[sw] < length_[w]) {
        words_[w].push_back(s);
        words_[w].insert(words_[w].end(), words_[sw].begin(), words_[sw].end());
        break;
      }
    }
  }
}

Element CoxGroup::from_word(const Word& word) const {
  Element e = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw Error("generator index out of range");
    e = left(*it, e);
  }
  return e;
}

Element CoxGroup::multiply(Element a, Element b) const {
  const Word& w = words_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) b = left(*it, b);
  return b;
}

Element CoxGroup::inverse(Element w) const {
  Word rev(words_[w].rbegin(), words_[w].rend());
  return from_word(rev);
}

Element CoxGroup::power(Element w, int e) const {
  if (e < 0) return power(inverse(w), -e);
  Element out = identity();
  for (int i = 0; i < e; ++i) out = multiply(w, out);
  return out;
}

Matrix<CycRat> CoxGroup::reflection_matrix(Element w) const {
  const int n = rank();
  Matrix<CycRat> m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = roots_[simple_images_[w][j]][i];
  return m;
}

int CoxGroup::fixed_space_dim(Element w) const {
  auto m = reflection_matrix(w);
  for (int i = 0; i < rank(); ++i) m(i, i) -= CycRat(1);
  return rank() - matrix_rank(std::move(m));
}

void CoxGroup::build_classes() {
  const std::size_t n = order();
  std::vector<std::size_t> owner(n, kNone);
  std::vector<ConjClass> found;
  for (std::size_t start = 0; start < n; ++start) {
    if (owner[start] != kNone) continue;
    ConjClass c;
    std::deque<Element> queue{static_cast<Element>(start)};
    owner[start] = found.size();
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      c.members.push_back(x);
      for (int s = 0; s < rank(); ++s) {
        const Element y = right(left(s, x), s);
        if (owner[y] == kNone) {
          owner[y] = found.size();
          queue.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.min_length = length_[c.members.front()];
    for (Element x : c.members) c.min_length = std::min(c.min_length, length_[x]);
    bool first = true;
    for (Element x : c.members) {
      if (length_[x] != c.min_length) continue;
      if (first || words_[x] < c.rep_word) {
        c.representative = x;
        c.rep_word = words_[x];
        first = false;
      }
    }
    c.m = fixed_space_dim(c.representative);
    for (Element x : c.members) {
      if (x == c.representative) continue;
      if (fixed_space_dim(x) != c.m) throw InvariantViolation("fixed-space dimension varies within a class");
      break;
    }
    c.elliptic = c.m == 0;
    found.push_back(std::move(c));
  }
  std::sort(found.begin(), found.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rep_word < b.rep_word;
  });
  classes_ = std::move(found);
  class_of_.assign(n, 0);
  for (std::size_t k = 0; k < classes_.size(); ++k)
    for (Element x : classes_[k].members) class_of_[x] = k;
}

void CoxGroup::assign_labels() {
  auto set_label = [&](std::size_t k, const std::string& label) {
    if (!classes_[k].label.empty())
      throw InvariantViolation("class named twice: " + classes_[k].label + " and " + label);
    classes_[k].label = label;
  };
  if (type_.family == 'I') {
    const Element c = from_word({0, 1});
    for (int j = 1; 2 * j <= type_.p; ++j)
      set_label(class_of(power(c, j)), j == 1 ? "c" : "c^" + std::to_string(j));
    set_label(class_of(from_word({0})), "s");
    if (type_.p % 2 == 0) set_label(class_of(from_word({1})), "t");
    set_label(identity_class(), "1");
  } else if (type_.family == 'B' && rank() == 3) {
    for (const auto& [label, digits] : b3_words()) {
      Word w;
      for (char d : digits) w.push_back(d - '1');
      set_label(class_of(from_word(w)), label);
    }
  } else if (type_.family == 'H') {
    std::map<int, int> seen;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      if (!classes_[k].elliptic) continue;
      const int n = classes_[k].min_length;
      set_label(k, (seen[n]++ ? "c'_" : "c_") + std::to_string(n));
    }
    for (const auto& name : preferred_names(type_)) {
      const std::size_t k = resolve_index(name);
      if (classes_[k].elliptic) throw InvariantViolation(name + " names an elliptic class");
      set_label(k, name);
    }
  }
  for (auto& c : classes_)
    if (c.label.empty()) c.label = word_label(c.rep_word);
}

std::size_t CoxGroup::resolve_index(std::string_view label, bool strict) const {
  const auto body = trim(label);
  int n = 0;
  if (strict && body.rfind("c_", 0) == 0 && parse_int(body.substr(2), n)) {
    std::vector<std::string> hits;
    for (const auto& c : classes_)
      if (c.elliptic && c.min_length == n) hits.push_back(c.label);
    if (hits.size() > 1) throw Ambiguous("label " + std::string(body) + " names several classes", hits);
  }
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].label == body) return k;
  if (type_.family == 'B' && rank() == 3 && body == "111.") return identity_class();
  if (body == "(-)") return identity_class();
  if (body.size() >= 3 && body.front() == '(') {
    const auto close = body.find(')');
    if (close != std::string_view::npos) {
      Word w;
      bool ok = true;
      for (char d : body.substr(1, close - 1)) {
        if (d < '1' || d - '1' >= rank()) ok = false;
        w.push_back(d - '1');
      }
      int e = 1;
      const auto tail = body.substr(close + 1);
      if (!tail.empty() && (tail.front() != '^' || !parse_int(tail.substr(1), e))) ok = false;
      if (ok) return class_of(power(from_word(w), e));
    }
  }
  if (type_.family == 'I' && body.rfind("c^", 0) == 0 && parse_int(body.substr(2), n))
    return class_of(power(from_word({0, 1}), n));
  throw NoMatch("no conjugacy class of " + type_.name() + " is named '" + std::string(body) + "'");
}

const ConjClass& CoxGroup::resolve_label(std::string_view label, bool strict) const {
  return classes_[resolve_index(label, strict)];
}

}  // namespace coxstrata
