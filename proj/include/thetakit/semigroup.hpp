// Finite semigroups given by Cayley tables: validation, parsing,
// left translations, power sets S^n and left reductivity.

#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

using Element = int;

// (a*b)*c != a*(b*c); `left` and `right` are the two evaluated products.
struct TripleWitness {
  Element a, b, c;
  Element left, right;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raw n x n multiplication table, row = left factor.  Not necessarily
// associative until wrapped in a Semigroup.
struct CayleyTable {
  int order = 0;
  std::vector<Element> products;    // row-major, order * order entries
  std::vector<std::string> names;   // empty, or `order` distinct symbols

  Element at(Element i, Element j) const {
    return products[static_cast<std::size_t>(i) * order + j];
  }
  Element& at(Element i, Element j) {
    return products[static_cast<std::size_t>(i) * order + j];
  }

  bool well_formed() const {
    if (order <= 0) {
      return false;
    }
    if (products.size() != static_cast<std::size_t>(order) * order) {
      return false;
    }
    for (Element p : products) {
      if (p < 0 || p >= order) {
        return false;
      }
    }
    if (!names.empty()) {
      if (names.size() != static_cast<std::size_t>(order)) {
        return false;
      }
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
      }
    }
    return true;
  }

  std::string name_of(Element e) const {
    if (!names.empty()) {
      return names[static_cast<std::size_t>(e)];
    }
    return std::to_string(e);
  }

  bool operator==(const CayleyTable& other) const {
    return order == other.order && products == other.products;
  }
};

// First failing triple in lexicographic (a, b, c) order, if any.
inline std::optional<TripleWitness> find_nonassociative_triple(
    const CayleyTable& t) {
  for (Element a = 0; a < t.order; ++a) {
    for (Element b = 0; b < t.order; ++b) {
      Element ab = t.at(a, b);
      for (Element c = 0; c < t.order; ++c) {
        Element lhs = t.at(ab, c);
        Element rhs = t.at(a, t.at(b, c));
        if (lhs != rhs) {
          return TripleWitness{a, b, c, lhs, rhs};
        }
      }
    }
  }
  return std::nullopt;
}

class NonAssociativeError : public std::runtime_error {
 public:
  TripleWitness witness;

  explicit NonAssociativeError(const CayleyTable& t, TripleWitness w)
      : std::runtime_error("not associative: (" + t.name_of(w.a) + "*" +
                           t.name_of(w.b) + ")*" + t.name_of(w.c) + " = " +
                           t.name_of(w.left) + " but " + t.name_of(w.a) +
                           "*(" + t.name_of(w.b) + "*" + t.name_of(w.c) +
                           ") = " + t.name_of(w.right)),
        witness(w) {}
};

// A validated associative Cayley table.  Immutable after construction.
class Semigroup {
 public:
  explicit Semigroup(CayleyTable t) : table_(std::move(t)) {
    if (!table_.well_formed()) {
      throw std::invalid_argument("malformed Cayley table");
    }
    if (auto w = find_nonassociative_triple(table_)) {
      throw NonAssociativeError(table_, *w);
    }
  }

  int order() const { return table_.order; }
  Element product(Element a, Element b) const { return table_.at(a, b); }
  const CayleyTable& table() const { return table_; }
  std::string name_of(Element e) const { return table_.name_of(e); }

  bool operator==(const Semigroup& other) const {
    return table_ == other.table_;
  }

 private:
  CayleyTable table_;
};

// Row x of the table, as the map a -> x*a.
inline std::vector<Element> left_translation(const Semigroup& s, Element x) {
  std::vector<Element> row(static_cast<std::size_t>(s.order()));
  for (Element a = 0; a < s.order(); ++a) {
    row[static_cast<std::size_t>(a)] = s.product(x, a);
  }
  return row;
}

// Members of S^n as a sorted element list.  S^1 = S, S^{k+1} = S * S^k.
inline std::vector<Element> power_set(const Semigroup& s, int n) {
  if (n < 1) {
    throw std::invalid_argument("power_set requires n >= 1");
  }
  std::vector<char> level(static_cast<std::size_t>(s.order()), 1);
  for (int k = 1; k < n; ++k) {
    std::vector<char> next(static_cast<std::size_t>(s.order()), 0);
    for (Element x = 0; x < s.order(); ++x) {
      for (Element t = 0; t < s.order(); ++t) {
        if (level[static_cast<std::size_t>(t)]) {
          next[static_cast<std::size_t>(s.product(x, t))] = 1;
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Element> out;
  for (Element e = 0; e < s.order(); ++e) {
    if (level[static_cast<std::size_t>(e)]) {
      out.push_back(e);
    }
  }
  return out;
}

// A pair (a, b), a != b, whose columns coincide — i.e. xa = xb for all x.
inline std::optional<std::pair<Element, Element>> left_reductivity_witness(
    const Semigroup& s) {
  for (Element a = 0; a < s.order(); ++a) {
    for (Element b = a + 1; b < s.order(); ++b) {
      bool equal = true;
      for (Element x = 0; x < s.order(); ++x) {
        if (s.product(x, a) != s.product(x, b)) {
          equal = false;
          break;
        }
      }
      if (equal) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

inline bool is_left_reductive(const Semigroup& s) {
  return !left_reductivity_witness(s).has_value();
}

// Text format: line 1 = element symbols, then one row of the table per
// line.  `#` starts a comment line.
inline CayleyTable parse_cayley_table(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') {
      continue;
    }
    std::vector<std::string> toks{first};
    std::string tok;
    while (ls >> tok) {
      toks.push_back(tok);
    }
    rows.push_back(std::move(toks));
  }
  if (rows.empty()) {
    throw ParseError("empty table file");
  }
  CayleyTable t;
  t.names = rows[0];
  t.order = static_cast<int>(t.names.size());
  if (rows.size() != static_cast<std::size_t>(t.order) + 1) {
    throw ParseError("expected " + std::to_string(t.order) +
                     " table rows, got " + std::to_string(rows.size() - 1));
  }
  for (int i = 0; i < t.order; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i) + 1];
    if (row.size() != static_cast<std::size_t>(t.order)) {
      throw ParseError("row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(t.order));
    }
    for (const auto& sym : row) {
      auto it = std::find(t.names.begin(), t.names.end(), sym);
      if (it == t.names.end()) {
        throw ParseError("unknown symbol '" + sym + "' in row " +
                         std::to_string(i));
      }
      t.products.push_back(static_cast<Element>(it - t.names.begin()));
    }
  }
  if (!t.well_formed()) {
    throw ParseError("duplicate element symbols in header");
  }
  return t;
}

inline CayleyTable parse_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  return parse_cayley_table(in);
}

inline std::string format_cayley_table(const CayleyTable& t) {
  std::ostringstream out;
  for (Element e = 0; e < t.order; ++e) {
    out << (e ? " " : "") << t.name_of(e);
  }
  out << '\n';
  for (Element i = 0; i < t.order; ++i) {
    for (Element j = 0; j < t.order; ++j) {
      out << (j ? " " : "") << t.name_of(t.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace thetakit
