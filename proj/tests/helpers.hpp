// Shared test utilities: fixture loading and the independent oracles
// (naive magma filtering, all-bijections isomorphism, congruence
// closure) that the library implementations are checked against.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/thetakit.hpp"

#ifndef FIXTURES_DIR
#error "FIXTURES_DIR must be defined"
#endif

namespace tktest {

namespace tk = thetakit;

inline tk::Semigroup load_fixture(const std::string& name) {
  return tk::Semigroup(
      tk::parse_cayley_table_file(std::string(FIXTURES_DIR) + "/" + name));
}

inline tk::CayleyTable load_fixture_table(const std::string& name) {
  return tk::parse_cayley_table_file(std::string(FIXTURES_DIR) + "/" + name);
}

inline tk::Semigroup make_semigroup(int n, std::vector<tk::Element> products,
                                    std::vector<std::string> names = {}) {
  tk::CayleyTable t;
  t.order = n;
  t.products = std::move(products);
  t.names = std::move(names);
  return tk::Semigroup(std::move(t));
}

// Oracle: all n^(n*n) tables, filtered by the full associativity check.
// Usable for n <= 3.
inline std::vector<tk::CayleyTable> naive_all_associative(int n) {
  std::vector<tk::CayleyTable> out;
  std::size_t cells = static_cast<std::size_t>(n) * n;
  tk::CayleyTable t;
  t.order = n;
  t.products.assign(cells, 0);
  for (;;) {
    if (!tk::find_nonassociative_triple(t)) {
      out.push_back(t);
    }
    std::size_t i = cells;
    while (i > 0 && ++t.products[i - 1] == n) {
      t.products[--i] = 0;
    }
    if (i == 0) {
      break;
    }
  }
  return out;
}

// Oracle: isomorphism by trying every one of the n! bijections.
inline std::optional<std::vector<tk::Element>> brute_force_isomorphism(
    const tk::Semigroup& a, const tk::Semigroup& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  std::vector<tk::Element> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (tk::Element i = 0; i < a.order() && ok; ++i) {
      for (tk::Element j = 0; j < a.order() && ok; ++j) {
        if (b.product(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(j)]) !=
            perm[static_cast<std::size_t>(a.product(i, j))]) {
          ok = false;
        }
      }
    }
    if (ok) {
      return perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Smallest congruence containing the given generator pairs, by
// union-find merging with left/right translation propagation.
inline tk::Congruence congruence_closure(
    const tk::Semigroup& s,
    const std::vector<std::pair<tk::Element, tk::Element>>& gens) {
  std::vector<int> parent(static_cast<std::size_t>(s.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  std::vector<std::pair<tk::Element, tk::Element>> queue = gens;
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      continue;
    }
    parent[static_cast<std::size_t>(ra)] = rb;
    for (tk::Element x = 0; x < s.order(); ++x) {
      queue.emplace_back(s.product(x, ra), s.product(x, rb));
      queue.emplace_back(s.product(ra, x), s.product(rb, x));
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(s.order()));
  for (tk::Element e = 0; e < s.order(); ++e) {
    labels[static_cast<std::size_t>(e)] = find(e);
  }
  return tk::make_congruence(s, tk::Partition::from_labels(labels));
}

// Relabel a semigroup by a permutation (new id = perm[old id]).
inline tk::Semigroup relabel(const tk::Semigroup& s,
                             const std::vector<tk::Element>& perm) {
  tk::CayleyTable t;
  t.order = s.order();
  t.products.assign(static_cast<std::size_t>(t.order) * t.order, 0);
  for (tk::Element i = 0; i < t.order; ++i) {
    for (tk::Element j = 0; j < t.order; ++j) {
      t.at(perm[static_cast<std::size_t>(i)],
           perm[static_cast<std::size_t>(j)]) =
          perm[static_cast<std::size_t>(s.product(i, j))];
    }
  }
  return tk::Semigroup(std::move(t));
}

}  // namespace tktest
