// Partitions, congruences, the left-annihilation congruence theta(S),
// the star operator rho -> rho*, the stabilizing tower and quotients.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace thetakit {

// Partition of [0, n) into dense blocks, block ids normalized by first
// occurrence (equivalently, ordered by least representative).
struct Partition {
  std::vector<int> block_of;
  int num_blocks = 0;

  static Partition from_labels(const std::vector<int>& labels) {
    Partition p;
    p.block_of.resize(labels.size());
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] =
          renumber.try_emplace(labels[i], static_cast<int>(renumber.size()));
      (void)fresh;
      p.block_of[i] = it->second;
    }
    p.num_blocks = static_cast<int>(renumber.size());
    return p;
  }

  static Partition identity(int n) {
    Partition p;
    p.block_of.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      p.block_of[static_cast<std::size_t>(i)] = i;
    }
    p.num_blocks = n;
    return p;
  }

  static Partition universal(int n) {
    Partition p;
    p.block_of.assign(static_cast<std::size_t>(n), 0);
    p.num_blocks = n > 0 ? 1 : 0;
    return p;
  }

  int size() const { return static_cast<int>(block_of.size()); }
  bool is_identity() const { return num_blocks == size(); }
  bool is_universal() const { return num_blocks <= 1; }
  bool same_block(Element a, Element b) const {
    return block_of[static_cast<std::size_t>(a)] ==
           block_of[static_cast<std::size_t>(b)];
  }

  // True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const {
    std::vector<int> image(static_cast<std::size_t>(num_blocks), -1);
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      int& img = image[static_cast<std::size_t>(block_of[i])];
      int cb = coarser.block_of[i];
      if (img == -1) {
        img = cb;
      } else if (img != cb) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Element>> blocks() const {
    std::vector<std::vector<Element>> out(
        static_cast<std::size_t>(num_blocks));
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      out[static_cast<std::size_t>(block_of[i])].push_back(
          static_cast<Element>(i));
    }
    return out;
  }

  bool operator==(const Partition& other) const {
    return block_of == other.block_of;
  }
};

// Compatibility failure: a, b in one block but x*a, x*b (left) or a*x,
// b*x (right) in different blocks.
struct CompatibilityWitness {
  Element a, b, x;
  bool left;
};

inline std::optional<CompatibilityWitness> congruence_witness(
    const Semigroup& s, const Partition& p) {
  for (Element a = 0; a < s.order(); ++a) {
    for (Element b = a + 1; b < s.order(); ++b) {
      if (!p.same_block(a, b)) {
        continue;
      }
      for (Element x = 0; x < s.order(); ++x) {
        if (!p.same_block(s.product(x, a), s.product(x, b))) {
          return CompatibilityWitness{a, b, x, true};
        }
        if (!p.same_block(s.product(a, x), s.product(b, x))) {
          return CompatibilityWitness{a, b, x, false};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_congruence(const Semigroup& s, const Partition& p) {
  return !congruence_witness(s, p).has_value();
}

struct Congruence {
  Partition partition;
  int owner_order = 0;

  bool operator==(const Congruence& other) const {
    return partition == other.partition;
  }
};

inline Congruence make_congruence(const Semigroup& s, Partition p) {
  if (p.size() != s.order()) {
    throw std::invalid_argument("partition size does not match semigroup");
  }
  if (auto w = congruence_witness(s, p)) {
    throw std::invalid_argument(
        "not a congruence: (" + s.name_of(w->a) + "," + s.name_of(w->b) +
        ") breaks " + (w->left ? "left" : "right") + " compatibility at x=" +
        s.name_of(w->x));
  }
  return Congruence{std::move(p), s.order()};
}

namespace detail {
// Group elements by signature vectors; used by theta, star, theta_n.
inline Partition group_by_signature(
    const std::vector<std::vector<int>>& sig) {
  std::map<std::vector<int>, int> seen;
  std::vector<int> labels(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    auto [it, fresh] =
        seen.try_emplace(sig[i], static_cast<int>(seen.size()));
    (void)fresh;
    labels[i] = it->second;
  }
  return Partition::from_labels(labels);
}
}  // namespace detail

// (a, b) related iff xa = xb for all x, i.e. equal table columns.
inline Congruence theta(const Semigroup& s) {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(s.order()));
  for (Element a = 0; a < s.order(); ++a) {
    auto& col = cols[static_cast<std::size_t>(a)];
    col.resize(static_cast<std::size_t>(s.order()));
    for (Element x = 0; x < s.order(); ++x) {
      col[static_cast<std::size_t>(x)] = s.product(x, a);
    }
  }
  return make_congruence(s, detail::group_by_signature(cols));
}

// rho*: (a, b) related iff (xa, xb) in rho for all x.
inline Congruence star(const Semigroup& s, const Congruence& rho) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(s.order()));
  for (Element a = 0; a < s.order(); ++a) {
    auto& v = sig[static_cast<std::size_t>(a)];
    v.resize(static_cast<std::size_t>(s.order()));
    for (Element x = 0; x < s.order(); ++x) {
      v[static_cast<std::size_t>(x)] =
          rho.partition.block_of[static_cast<std::size_t>(s.product(x, a))];
    }
  }
  return make_congruence(s, detail::group_by_signature(sig));
}

// theta_n computed directly from its defining condition xa = xb for all
// x in S^n.
inline Congruence theta_n_direct(const Semigroup& s, int n) {
  auto xs = power_set(s, n);
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(s.order()));
  for (Element a = 0; a < s.order(); ++a) {
    auto& v = sig[static_cast<std::size_t>(a)];
    v.reserve(xs.size());
    for (Element x : xs) {
      v.push_back(s.product(x, a));
    }
  }
  return make_congruence(s, detail::group_by_signature(sig));
}

struct QuotientResult {
  Semigroup semigroup;
  std::vector<Element> projection;  // element of S -> element of S/rho
};

// S/rho, block ids by least representative.  Block product [a][b] =
// [a*b]; well defined by compatibility, asserted anyway.
inline QuotientResult quotient(const Semigroup& s, const Congruence& rho) {
  const Partition& p = rho.partition;
  if (p.size() != s.order()) {
    throw std::invalid_argument("congruence does not fit semigroup");
  }
  auto blocks = p.blocks();
  int k = p.num_blocks;
  CayleyTable t;
  t.order = k;
  t.products.assign(static_cast<std::size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Element rep =
          s.product(blocks[static_cast<std::size_t>(i)][0],
                    blocks[static_cast<std::size_t>(j)][0]);
      t.at(i, j) = p.block_of[static_cast<std::size_t>(rep)];
      for (Element a : blocks[static_cast<std::size_t>(i)]) {
        for (Element b : blocks[static_cast<std::size_t>(j)]) {
          if (p.block_of[static_cast<std::size_t>(s.product(a, b))] !=
              t.at(i, j)) {
            throw std::logic_error("quotient product not well defined");
          }
        }
      }
    }
  }
  if (!s.table().names.empty()) {
    for (int i = 0; i < k; ++i) {
      t.names.push_back(s.name_of(blocks[static_cast<std::size_t>(i)][0]));
    }
  }
  return QuotientResult{Semigroup(std::move(t)), p.block_of};
}

// Ascending tower iota^(0) = identity, iota^(i+1) = (iota^(i))*, with
// the quotient chain S_i = S / iota^(i).
struct ThetaTower {
  std::vector<Congruence> levels;        // distinct levels 0..stabilization
  int stabilization_index = 0;           // least n with level n = level n+1
  std::vector<QuotientResult> quotients;  // aligned with levels

  const Congruence& final_level() const {
    return levels[static_cast<std::size_t>(stabilization_index)];
  }
  const Semigroup& final_quotient() const {
    return quotients[static_cast<std::size_t>(stabilization_index)].semigroup;
  }
  // level(i) for any i >= 0, constant past stabilization.
  const Congruence& level(int i) const {
    return levels[static_cast<std::size_t>(
        std::min(i, stabilization_index))];
  }
};

inline ThetaTower tower(const Semigroup& s) {
  ThetaTower tw;
  tw.levels.push_back(
      Congruence{Partition::identity(s.order()), s.order()});
  tw.quotients.push_back(quotient(s, tw.levels.back()));
  // The partition lattice has height < |S|, so the cap cannot be hit.
  for (int i = 0; i <= s.order(); ++i) {
    Congruence next = star(s, tw.levels.back());
    if (next == tw.levels.back()) {
      tw.stabilization_index = i;
      return tw;
    }
    if (!tw.levels.back().partition.refines(next.partition)) {
      throw std::logic_error("tower is not ascending");
    }
    tw.levels.push_back(std::move(next));
    tw.quotients.push_back(quotient(s, tw.levels.back()));
  }
  throw std::logic_error("tower failed to stabilize within |S| steps");
}

inline std::string format_partition(const Partition& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) {
    out << (i ? " " : "") << p.block_of[static_cast<std::size_t>(i)];
  }
  return out.str();
}

}  // namespace thetakit
