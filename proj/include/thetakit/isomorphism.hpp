// Certified isomorphism testing for small semigroups: backtracking over
// bijections with cheap relabeling-invariant pruning, and a canonical
// key (minimal table over all relabelings) for census deduplication.

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace thetakit {

struct IsomorphismWitness {
  std::vector<Element> mapping;  // element of A -> element of B
};

namespace detail {

// Relabeling-invariant per-element profile: idempotency, occurrence
// count as a product, distinct values in the element's row and column,
// and fixed-point counts of its translations.
using ElementProfile = std::array<int, 5>;

inline std::vector<ElementProfile> element_profiles(const Semigroup& s) {
  int n = s.order();
  std::vector<ElementProfile> out(static_cast<std::size_t>(n));
  std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      ++occurrences[static_cast<std::size_t>(s.product(i, j))];
    }
  }
  for (Element a = 0; a < n; ++a) {
    std::vector<char> row_vals(static_cast<std::size_t>(n), 0);
    std::vector<char> col_vals(static_cast<std::size_t>(n), 0);
    int row_fixed = 0, col_fixed = 0;
    for (Element x = 0; x < n; ++x) {
      row_vals[static_cast<std::size_t>(s.product(a, x))] = 1;
      col_vals[static_cast<std::size_t>(s.product(x, a))] = 1;
      if (s.product(a, x) == x) {
        ++row_fixed;
      }
      if (s.product(x, a) == x) {
        ++col_fixed;
      }
    }
    out[static_cast<std::size_t>(a)] = {
        s.product(a, a) == a ? 1 : 0,
        occurrences[static_cast<std::size_t>(a)],
        static_cast<int>(std::count(row_vals.begin(), row_vals.end(), 1)) *
                100 +
            static_cast<int>(std::count(col_vals.begin(), col_vals.end(), 1)),
        row_fixed, col_fixed};
  }
  return out;
}

inline bool extend_bijection(const Semigroup& a, const Semigroup& b,
                             const std::vector<ElementProfile>& pa,
                             const std::vector<ElementProfile>& pb,
                             std::vector<Element>& map,
                             std::vector<char>& used, Element next) {
  int n = a.order();
  if (next == n) {
    return true;
  }
  for (Element img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)] ||
        pa[static_cast<std::size_t>(next)] !=
            pb[static_cast<std::size_t>(img)]) {
      continue;
    }
    map[static_cast<std::size_t>(next)] = img;
    used[static_cast<std::size_t>(img)] = 1;
    bool ok = true;
    for (Element i = 0; i <= next && ok; ++i) {
      for (Element j = 0; j <= next && ok; ++j) {
        Element p = a.product(i, j);
        if (p <= next &&
            b.product(map[static_cast<std::size_t>(i)],
                      map[static_cast<std::size_t>(j)]) !=
                map[static_cast<std::size_t>(p)]) {
          ok = false;
        }
      }
    }
    if (ok && extend_bijection(a, b, pa, pb, map, used, next + 1)) {
      return true;
    }
    used[static_cast<std::size_t>(img)] = 0;
  }
  map[static_cast<std::size_t>(next)] = -1;
  return false;
}

}  // namespace detail

inline std::optional<IsomorphismWitness> are_isomorphic(const Semigroup& a,
                                                        const Semigroup& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  auto pa = detail::element_profiles(a);
  auto pb = detail::element_profiles(b);
  auto sorted_pa = pa;
  auto sorted_pb = pb;
  std::sort(sorted_pa.begin(), sorted_pa.end());
  std::sort(sorted_pb.begin(), sorted_pb.end());
  if (sorted_pa != sorted_pb) {
    return std::nullopt;
  }
  std::vector<Element> map(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(a.order()), 0);
  if (!detail::extend_bijection(a, b, pa, pb, map, used, 0)) {
    return std::nullopt;
  }
  // soundness check on the returned witness
  for (Element i = 0; i < a.order(); ++i) {
    for (Element j = 0; j < a.order(); ++j) {
      if (b.product(map[static_cast<std::size_t>(i)],
                    map[static_cast<std::size_t>(j)]) !=
          map[static_cast<std::size_t>(a.product(i, j))]) {
        throw std::logic_error("isomorphism search returned a bad witness");
      }
    }
  }
  return IsomorphismWitness{std::move(map)};
}

// Minimal row-major serialization of the table over all relabelings.
// Equal keys iff isomorphic.
inline std::string canonical_key(const Semigroup& s) {
  int n = s.order();
  std::vector<Element> perm(static_cast<std::size_t>(n));
  for (Element i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(i)] = i;
  }
  std::string best;
  std::string cur(static_cast<std::size_t>(n) * n, '\0');
  std::vector<Element> inv(static_cast<std::size_t>(n));
  do {
    for (Element i = 0; i < n; ++i) {
      inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    }
    bool abort = false;
    for (Element i = 0; i < n && !abort; ++i) {
      for (Element j = 0; j < n; ++j) {
        char v = static_cast<char>(
            perm[static_cast<std::size_t>(s.product(
                inv[static_cast<std::size_t>(i)],
                inv[static_cast<std::size_t>(j)]))]);
        std::size_t idx = static_cast<std::size_t>(i) * n + j;
        cur[idx] = v;
        if (!best.empty() && v > best[idx]) {
          abort = true;  // this relabeling cannot beat the best
          break;
        }
        if (!best.empty() && v < best[idx]) {
          // strictly better prefix; fill the rest without comparing
          for (std::size_t r = idx + 1; r < cur.size(); ++r) {
            Element ri = static_cast<Element>(r) / n;
            Element rj = static_cast<Element>(r) % n;
            cur[r] = static_cast<char>(
                perm[static_cast<std::size_t>(s.product(
                    inv[static_cast<std::size_t>(ri)],
                    inv[static_cast<std::size_t>(rj)]))]);
          }
          best = cur;
          abort = true;
          break;
        }
      }
    }
    if (best.empty()) {
      best = cur;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace thetakit
