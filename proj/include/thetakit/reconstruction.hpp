// Canonical derivation of a semigroup T from T/theta(T): the fibers are
// the theta-classes and the maps send a to a*b for a representative b.
// Rebuilding recovers T exactly.  Also the falsifier for the original
// pair-indexed variant, whose maps depend only on source and target
// fibers.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "construction.hpp"
#include "semigroup.hpp"

namespace thetakit {

struct CanonicalDerivation {
  Semigroup source;
  Semigroup quotient;               // S = T/theta(T)
  std::vector<Element> projection;  // T element -> S element
  FiberSystem fibers;               // theta-classes, carrier ids = T ids
  MappingFamily family;             // f_(x,y,xy): a -> a*b, b least in [y]
};

// The image a*b is independent of the representative b within its
// class; that independence and the cocycle law are asserted as
// tripwires, since both are forced by theta being a congruence.
inline CanonicalDerivation canonical_derivation(const Semigroup& t) {
  Congruence th = theta(t);
  QuotientResult q = quotient(t, th);
  FiberSystem fibers =
      FiberSystem::from_labels(q.semigroup.order(), q.projection);
  MappingFamily fam;
  fam.base_order = q.semigroup.order();
  fam.maps.resize(static_cast<std::size_t>(fam.base_order) * fam.base_order);
  for (Element x = 0; x < fam.base_order; ++x) {
    for (Element y = 0; y < fam.base_order; ++y) {
      const auto& class_y = fibers.members[static_cast<std::size_t>(y)];
      CarrierId rep = class_y[0];
      auto& images = fam.map(x, y);
      for (CarrierId a : fibers.members[static_cast<std::size_t>(x)]) {
        CarrierId img = t.product(a, rep);
        for (CarrierId b : class_y) {
          if (t.product(a, b) != img) {
            throw std::logic_error(
                "canonical map depends on the representative");
          }
        }
        images.push_back(img);
      }
    }
  }
  if (validate_family(q.semigroup, fibers, fam)) {
    throw std::logic_error("canonical family failed the cocycle law");
  }
  return CanonicalDerivation{t, std::move(q.semigroup),
                             std::move(q.projection), std::move(fibers),
                             std::move(fam)};
}

// Rebuilds (T, o) from the canonical derivation and checks a o b = a*b
// for every pair; the certifying isomorphism is the identity map.
inline bool rebuild_and_compare(const Semigroup& t) {
  CanonicalDerivation d = canonical_derivation(t);
  Semigroup rebuilt = build_product(d.quotient, d.fibers, d.family);
  return rebuilt.table() == t.table();
}

// A triple (a, b, b_alt) with [a*b] = [a*b_alt] mod theta but
// a*b != a*b_alt.  Such a triple defeats every pair-indexed family:
// the map from [a] to the common target class forces a o b = a o b_alt.
struct ObstructionWitness {
  Element a, b, b_alt;
};

inline std::optional<ObstructionWitness> pairwise_obstruction(
    const Semigroup& t) {
  Congruence th = theta(t);
  for (Element a = 0; a < t.order(); ++a) {
    for (Element b = 0; b < t.order(); ++b) {
      for (Element b_alt = b + 1; b_alt < t.order(); ++b_alt) {
        Element ab = t.product(a, b);
        Element ab_alt = t.product(a, b_alt);
        if (ab != ab_alt && th.partition.same_block(ab, ab_alt)) {
          return ObstructionWitness{a, b, b_alt};
        }
      }
    }
  }
  return std::nullopt;
}

// A pair-indexed family over S = T/theta: one map per reachable pair
// (x, z) with z in x*S, images of class x's members in carrier-id order.
struct PairFamily {
  std::map<std::pair<Element, Element>, std::vector<CarrierId>> maps;
};

class BudgetExceeded : public std::runtime_error {
 public:
  std::uint64_t candidate_count;

  explicit BudgetExceeded(std::uint64_t count)
      : std::runtime_error("pair-indexed search space has " +
                           std::to_string(count) +
                           " candidate families, over budget"),
        candidate_count(count) {}
};

namespace detail {

struct PairSearchContext {
  const Semigroup* t;
  Partition theta_partition;
  Semigroup quotient;                              // S
  std::vector<Element> proj;                       // T -> S
  std::vector<std::vector<CarrierId>> classes;     // per S element
  std::vector<int> pos;                            // T id -> index in class
  std::vector<std::pair<Element, Element>> pairs;  // reachable (x, z)
  std::vector<int> pair_index;                     // x*n+z -> index or -1
  std::vector<std::vector<CarrierId>> assigned;    // per pair, images
};

inline CarrierId pf_apply(const PairSearchContext& ctx, int pair_idx,
                          CarrierId a) {
  return ctx.assigned[static_cast<std::size_t>(pair_idx)]
      [static_cast<std::size_t>(ctx.pos[static_cast<std::size_t>(a)])];
}

// Checks every composition-law instance f_y^z . f_x^y = f_x^z in which
// all three maps are already assigned and at least one is `last`.
inline bool composition_consistent(const PairSearchContext& ctx, int last) {
  int n = ctx.quotient.order();
  auto idx = [&](Element x, Element z) {
    return ctx.pair_index[static_cast<std::size_t>(x) * n + z];
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      int xy = idx(x, y);
      if (xy < 0 || ctx.assigned[static_cast<std::size_t>(xy)].empty()) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        int yz = idx(y, z);
        int xz = idx(x, z);
        if (yz < 0 || xz < 0 ||
            ctx.assigned[static_cast<std::size_t>(yz)].empty() ||
            ctx.assigned[static_cast<std::size_t>(xz)].empty()) {
          continue;
        }
        if (xy != last && yz != last && xz != last) {
          continue;
        }
        for (CarrierId a : ctx.classes[static_cast<std::size_t>(x)]) {
          if (pf_apply(ctx, yz, pf_apply(ctx, xy, a)) !=
              pf_apply(ctx, xz, a)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool reproduces_product(const PairSearchContext& ctx) {
  const Semigroup& t = *ctx.t;
  int n = ctx.quotient.order();
  for (CarrierId a = 0; a < t.order(); ++a) {
    Element x = ctx.proj[static_cast<std::size_t>(a)];
    for (CarrierId b = 0; b < t.order(); ++b) {
      Element z = ctx.quotient.product(x, ctx.proj[static_cast<std::size_t>(b)]);
      int pi = ctx.pair_index[static_cast<std::size_t>(x) * n + z];
      if (pf_apply(ctx, pi, a) != t.product(a, b)) {
        return false;
      }
    }
  }
  return true;
}

inline bool assign_pairs(PairSearchContext& ctx, std::size_t k) {
  if (k == ctx.pairs.size()) {
    return reproduces_product(ctx);
  }
  auto [x, z] = ctx.pairs[k];
  const auto& src = ctx.classes[static_cast<std::size_t>(x)];
  const auto& dst = ctx.classes[static_cast<std::size_t>(z)];
  std::vector<int> choice(src.size(), 0);
  for (;;) {
    auto& images = ctx.assigned[k];
    images.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      images[i] = dst[static_cast<std::size_t>(choice[i])];
    }
    if (composition_consistent(ctx, static_cast<int>(k)) &&
        assign_pairs(ctx, k + 1)) {
      return true;
    }
    // next mixed-radix choice vector
    std::size_t i = 0;
    while (i < choice.size() &&
           ++choice[i] == static_cast<int>(dst.size())) {
      choice[i++] = 0;
    }
    if (i == choice.size()) {
      ctx.assigned[k].clear();
      return false;
    }
  }
}

}  // namespace detail

// Enumerates every pair-indexed family over the reachable pairs that
// satisfies the composition law, and returns one whose product table
// equals T, or nullopt if none exists.  A pairwise_obstruction witness
// exists exactly when this returns nullopt.
inline std::optional<PairFamily> exhaustive_pairwise_search(
    const Semigroup& t, std::uint64_t budget = 1'000'000) {
  detail::PairSearchContext ctx{nullptr,
                                {},
                                quotient(t, theta(t)).semigroup,
                                {},
                                {},
                                {},
                                {},
                                {},
                                {}};
  ctx.t = &t;
  Congruence th = theta(t);
  ctx.theta_partition = th.partition;
  QuotientResult q = quotient(t, th);
  ctx.quotient = q.semigroup;
  ctx.proj = q.projection;
  int n = ctx.quotient.order();
  ctx.classes = ctx.theta_partition.blocks();
  ctx.pos.resize(static_cast<std::size_t>(t.order()));
  for (const auto& cls : ctx.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      ctx.pos[static_cast<std::size_t>(cls[i])] = static_cast<int>(i);
    }
  }
  // Maps exist only for pairs (x, z) with z = x*u for some u.
  ctx.pair_index.assign(static_cast<std::size_t>(n) * n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element u = 0; u < n; ++u) {
      Element z = ctx.quotient.product(x, u);
      auto& slot = ctx.pair_index[static_cast<std::size_t>(x) * n + z];
      if (slot == -1) {
        slot = static_cast<int>(ctx.pairs.size());
        ctx.pairs.emplace_back(x, z);
      }
    }
  }
  std::uint64_t count = 1;
  for (auto [x, z] : ctx.pairs) {
    std::uint64_t base = ctx.classes[static_cast<std::size_t>(z)].size();
    for (std::size_t i = 0; i < ctx.classes[static_cast<std::size_t>(x)].size();
         ++i) {
      if (count > budget / (base == 0 ? 1 : base)) {
        throw BudgetExceeded(count * base);
      }
      count *= base;
    }
  }
  if (count > budget) {
    throw BudgetExceeded(count);
  }
  ctx.assigned.resize(ctx.pairs.size());
  if (!detail::assign_pairs(ctx, 0)) {
    return std::nullopt;
  }
  PairFamily fam;
  for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
    fam.maps.emplace(ctx.pairs[k], ctx.assigned[k]);
  }
  return fam;
}

}  // namespace thetakit
