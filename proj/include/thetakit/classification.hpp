// Deciding when the theta tower reaches the universal relation, and the
// equivalent structural condition: an ideal extension of a left zero
// semigroup by a nilpotent semigroup.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "semigroup.hpp"

namespace thetakit {

using ElementSubset = std::vector<Element>;  // sorted, unique

struct IdealWitness {
  ElementSubset members;
  bool left_zero_ok = false;
  std::optional<int> rees_nilpotency_index;
};

struct TowerVerdict {
  bool reaches_universal = false;
  int level = 0;  // least level at which the tower is universal
};

inline TowerVerdict tower_reaches_universal(const Semigroup& s) {
  ThetaTower tw = tower(s);
  for (int i = 0; i <= tw.stabilization_index; ++i) {
    if (tw.levels[static_cast<std::size_t>(i)].partition.is_universal()) {
      return TowerVerdict{true, i};
    }
  }
  return TowerVerdict{false, tw.stabilization_index};
}

inline bool is_ideal(const Semigroup& s, const ElementSubset& k) {
  if (k.empty()) {
    return false;
  }
  for (Element a : k) {
    for (Element x = 0; x < s.order(); ++x) {
      if (!std::binary_search(k.begin(), k.end(), s.product(x, a)) ||
          !std::binary_search(k.begin(), k.end(), s.product(a, x))) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {
// All ideals as unions of principal ideals S^1 a S^1, closed under
// union.  Exact for every order; subset filtering would also do at desk
// scale.
inline std::vector<ElementSubset> ideals_by_principal_closure(
    const Semigroup& s) {
  std::set<ElementSubset> found;
  for (Element a = 0; a < s.order(); ++a) {
    std::vector<char> in(static_cast<std::size_t>(s.order()), 0);
    in[static_cast<std::size_t>(a)] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element b = 0; b < s.order(); ++b) {
        if (!in[static_cast<std::size_t>(b)]) {
          continue;
        }
        for (Element x = 0; x < s.order(); ++x) {
          for (Element p : {s.product(x, b), s.product(b, x)}) {
            if (!in[static_cast<std::size_t>(p)]) {
              in[static_cast<std::size_t>(p)] = 1;
              changed = true;
            }
          }
        }
      }
    }
    ElementSubset principal;
    for (Element e = 0; e < s.order(); ++e) {
      if (in[static_cast<std::size_t>(e)]) {
        principal.push_back(e);
      }
    }
    found.insert(std::move(principal));
  }
  // close under binary union
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSubset> snapshot(found.begin(), found.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        ElementSubset u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(u));
        if (found.insert(std::move(u)).second) {
          grew = true;
        }
      }
    }
  }
  return {found.begin(), found.end()};
}
}  // namespace detail

// All nonempty two-sided ideals, sorted by size then lexicographically.
inline std::vector<ElementSubset> ideals(const Semigroup& s) {
  std::vector<ElementSubset> out;
  if (s.order() <= 6) {
    for (unsigned mask = 1; mask < (1u << s.order()); ++mask) {
      ElementSubset k;
      for (Element e = 0; e < s.order(); ++e) {
        if (mask & (1u << e)) {
          k.push_back(e);
        }
      }
      if (is_ideal(s, k)) {
        out.push_back(std::move(k));
      }
    }
  } else {
    out = detail::ideals_by_principal_closure(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// a*b = a for all a, b in K.
inline bool is_left_zero_sub(const Semigroup& s, const ElementSubset& k) {
  for (Element a : k) {
    for (Element b : k) {
      if (s.product(a, b) != a) {
        return false;
      }
    }
  }
  return true;
}

struct ReesQuotient {
  Semigroup semigroup;
  Element zero;  // the collapsed ideal, always the last element
};

// Elements S \ K plus an adjoined zero; products landing in K collapse.
// K = S is legal and yields the trivial semigroup.
inline ReesQuotient rees_quotient(const Semigroup& s, const ElementSubset& k) {
  if (!is_ideal(s, k)) {
    throw std::invalid_argument("K is not a two-sided ideal");
  }
  std::vector<Element> rest;  // remaining elements, old ids
  std::vector<Element> to_new(static_cast<std::size_t>(s.order()), -1);
  for (Element e = 0; e < s.order(); ++e) {
    if (!std::binary_search(k.begin(), k.end(), e)) {
      to_new[static_cast<std::size_t>(e)] = static_cast<Element>(rest.size());
      rest.push_back(e);
    }
  }
  int m = static_cast<int>(rest.size()) + 1;
  Element zero = m - 1;
  CayleyTable t;
  t.order = m;
  t.products.assign(static_cast<std::size_t>(m) * m, zero);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      Element p = s.product(rest[i], rest[j]);
      Element np = to_new[static_cast<std::size_t>(p)];
      t.at(static_cast<Element>(i), static_cast<Element>(j)) =
          np == -1 ? zero : np;
    }
  }
  if (!s.table().names.empty()) {
    for (Element e : rest) {
      t.names.push_back(s.name_of(e));
    }
    std::string z = "0~";
    while (std::find(t.names.begin(), t.names.end(), z) != t.names.end()) {
      z += "~";
    }
    t.names.push_back(z);
  }
  return ReesQuotient{Semigroup(std::move(t)), zero};
}

inline std::optional<Element> find_zero(const Semigroup& s) {
  for (Element z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (Element x = 0; x < s.order(); ++x) {
      if (s.product(z, x) != z || s.product(x, z) != z) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

// Least m with Q^m = {0}, or nullopt.  Power sets strictly decrease
// until stable, so m <= |Q| when it exists.
inline std::optional<int> is_nilpotent(const Semigroup& q) {
  auto zero = find_zero(q);
  if (!zero) {
    throw std::invalid_argument("semigroup has no two-sided zero");
  }
  for (int m = 1; m <= q.order(); ++m) {
    auto pw = power_set(q, m);
    if (pw.size() == 1 && pw[0] == *zero) {
      return m;
    }
  }
  return std::nullopt;
}

// Searches for an ideal K that is a left zero semigroup and whose Rees
// quotient is nilpotent.  Smallest qualifying ideal first.
inline std::optional<IdealWitness> is_extension_leftzero_by_nilpotent(
    const Semigroup& s) {
  for (const auto& k : ideals(s)) {
    if (!is_left_zero_sub(s, k)) {
      continue;
    }
    ReesQuotient q = rees_quotient(s, k);
    if (auto m = is_nilpotent(q.semigroup)) {
      return IdealWitness{k, true, m};
    }
  }
  return std::nullopt;
}

// theta_n = omega for some n  <=>  ideal extension of a left zero
// semigroup by a nilpotent semigroup.  Both sides decided directly.
inline bool theorem_equivalence_check(const Semigroup& s) {
  return tower_reaches_universal(s).reaches_universal ==
         is_extension_leftzero_by_nilpotent(s).has_value();
}

}  // namespace thetakit
