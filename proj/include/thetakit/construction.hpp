// The corrected triple-indexed construction: fibers T_x over a base
// semigroup S, a mapping family f_(x,y,xy): T_x -> T_xy obeying the
// cocycle law, and the product a o b = f_(x,y,xy)(a).

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "semigroup.hpp"

namespace thetakit {

using CarrierId = int;

// Disjoint nonempty fibers T_x covering a carrier of dense ids.
// fiber_of is the surjective labeling carrier -> base element.
struct FiberSystem {
  int base_order = 0;
  std::vector<Element> fiber_of;
  std::vector<std::vector<CarrierId>> members;  // per base element, sorted
  std::vector<int> pos;                         // carrier -> index in fiber

  static FiberSystem from_labels(int base_order,
                                 std::vector<Element> fiber_of) {
    FiberSystem f;
    f.base_order = base_order;
    f.fiber_of = std::move(fiber_of);
    f.members.resize(static_cast<std::size_t>(base_order));
    f.pos.resize(f.fiber_of.size());
    for (std::size_t c = 0; c < f.fiber_of.size(); ++c) {
      Element x = f.fiber_of[c];
      if (x < 0 || x >= base_order) {
        throw std::invalid_argument("fiber label out of range");
      }
      f.pos[c] = static_cast<int>(f.members[static_cast<std::size_t>(x)].size());
      f.members[static_cast<std::size_t>(x)].push_back(
          static_cast<CarrierId>(c));
    }
    for (Element x = 0; x < base_order; ++x) {
      if (f.members[static_cast<std::size_t>(x)].empty()) {
        throw std::invalid_argument("empty fiber T_" + std::to_string(x));
      }
    }
    return f;
  }

  int carrier_size() const { return static_cast<int>(fiber_of.size()); }
  int fiber_size(Element x) const {
    return static_cast<int>(members[static_cast<std::size_t>(x)].size());
  }
};

// One total map T_x -> T_xy per ordered pair (x, y).  The pair is the
// paper-facing triple (x, y, xy) with the determined third component.
// Maps sharing source and target fibers but different middle index are
// distinct objects.
struct MappingFamily {
  int base_order = 0;
  // maps[x * base_order + y] = images (carrier ids) of T_x's members,
  // listed in carrier-id order.
  std::vector<std::vector<CarrierId>> maps;

  const std::vector<CarrierId>& map(Element x, Element y) const {
    return maps[static_cast<std::size_t>(x) * base_order + y];
  }
  std::vector<CarrierId>& map(Element x, Element y) {
    return maps[static_cast<std::size_t>(x) * base_order + y];
  }

  CarrierId apply(const FiberSystem& fibers, Element x, Element y,
                  CarrierId a) const {
    return map(x, y)[static_cast<std::size_t>(
        fibers.pos[static_cast<std::size_t>(a)])];
  }
};

struct FamilyViolation {
  enum class Kind { shape, cocycle };
  Kind kind;
  Element x, y, z = -1;   // z unused for shape failures
  CarrierId carrier = -1;  // source element witnessing a cocycle break
  std::string detail;
};

// Checks map shapes and then the cocycle law
//   f_(xy,z,xyz) . f_(x,y,xy) = f_(x,yz,xyz)
// over all |S|^3 triples and all source-fiber elements.
inline std::optional<FamilyViolation> validate_family(
    const Semigroup& s, const FiberSystem& fibers, const MappingFamily& fam) {
  int n = s.order();
  if (fibers.base_order != n || fam.base_order != n ||
      fam.maps.size() != static_cast<std::size_t>(n) * n) {
    return FamilyViolation{FamilyViolation::Kind::shape, -1, -1, -1, -1,
                           "family/fiber sizes do not match base semigroup"};
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto& m = fam.map(x, y);
      if (static_cast<int>(m.size()) != fibers.fiber_size(x)) {
        return FamilyViolation{FamilyViolation::Kind::shape, x, y, -1, -1,
                               "map (" + std::to_string(x) + "," +
                                   std::to_string(y) + ") has wrong arity"};
      }
      Element target = s.product(x, y);
      for (CarrierId img : m) {
        if (img < 0 || img >= fibers.carrier_size() ||
            fibers.fiber_of[static_cast<std::size_t>(img)] != target) {
          return FamilyViolation{FamilyViolation::Kind::shape, x, y, -1, -1,
                                 "map (" + std::to_string(x) + "," +
                                     std::to_string(y) +
                                     ") image outside T_" +
                                     std::to_string(target)};
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = s.product(x, y);
      for (Element z = 0; z < n; ++z) {
        Element yz = s.product(y, z);
        for (CarrierId a : fibers.members[static_cast<std::size_t>(x)]) {
          CarrierId via = fam.apply(fibers, xy, z, fam.apply(fibers, x, y, a));
          CarrierId direct = fam.apply(fibers, x, yz, a);
          if (via != direct) {
            return FamilyViolation{FamilyViolation::Kind::cocycle, x, y, z, a,
                                   "cocycle law fails"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Builds (T, o) with a o b = f_(x,y,xy)(a) for a in T_x, b in T_y.
// The output table is validated associative even though the cocycle law
// already guarantees it.
inline Semigroup build_product(const Semigroup& s, const FiberSystem& fibers,
                               const MappingFamily& fam) {
  if (auto v = validate_family(s, fibers, fam)) {
    throw std::invalid_argument("invalid mapping family: " + v->detail);
  }
  int m = fibers.carrier_size();
  CayleyTable t;
  t.order = m;
  t.products.resize(static_cast<std::size_t>(m) * m);
  for (CarrierId a = 0; a < m; ++a) {
    Element x = fibers.fiber_of[static_cast<std::size_t>(a)];
    for (CarrierId b = 0; b < m; ++b) {
      Element y = fibers.fiber_of[static_cast<std::size_t>(b)];
      t.at(a, b) = fam.apply(fibers, x, y, a);
    }
  }
  return Semigroup(std::move(t));
}

// Every fiber lies inside a single theta-class of the built semigroup.
inline bool verify_fiber_containment(const Semigroup& t_built,
                                     const FiberSystem& fibers) {
  Congruence th = theta(t_built);
  for (const auto& fiber : fibers.members) {
    for (CarrierId c : fiber) {
      if (!th.partition.same_block(fiber[0], c)) {
        return false;
      }
    }
  }
  return true;
}

// Under a left reductive base the theta-classes are exactly the fibers.
inline bool verify_classes_exact(const Semigroup& s, const Semigroup& t_built,
                                 const FiberSystem& fibers) {
  if (!is_left_reductive(s)) {
    throw std::invalid_argument("base semigroup is not left reductive");
  }
  Partition fiber_partition = Partition::from_labels(fibers.fiber_of);
  return theta(t_built).partition == fiber_partition;
}

// Family text format: `family <|S|> <|T|>`, then one line per pair,
// `map <x> <y> : t0 t1 ... tk` with images in carrier-id order.
inline std::string format_family(const FiberSystem& fibers,
                                 const MappingFamily& fam) {
  std::ostringstream out;
  out << "family " << fibers.base_order << ' ' << fibers.carrier_size()
      << '\n';
  for (Element x = 0; x < fibers.base_order; ++x) {
    for (Element y = 0; y < fibers.base_order; ++y) {
      out << "map " << x << ' ' << y << " :";
      for (CarrierId img : fam.map(x, y)) {
        out << ' ' << img;
      }
      out << '\n';
    }
  }
  return out.str();
}

inline MappingFamily parse_family(std::istream& in,
                                  const FiberSystem& fibers) {
  MappingFamily fam;
  fam.base_order = fibers.base_order;
  fam.maps.assign(
      static_cast<std::size_t>(fibers.base_order) * fibers.base_order, {});
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') {
      continue;
    }
    if (kw == "family") {
      int ns = 0, nt = 0;
      if (!(ls >> ns >> nt) || ns != fibers.base_order ||
          nt != fibers.carrier_size()) {
        throw ParseError("family header does not match fiber system");
      }
      saw_header = true;
    } else if (kw == "map") {
      Element x = -1, y = -1;
      std::string colon;
      if (!(ls >> x >> y >> colon) || colon != ":") {
        throw ParseError("malformed map line: " + line);
      }
      if (x < 0 || x >= fibers.base_order || y < 0 ||
          y >= fibers.base_order) {
        throw ParseError("map indices out of range: " + line);
      }
      std::vector<CarrierId> images;
      CarrierId img;
      while (ls >> img) {
        images.push_back(img);
      }
      fam.map(x, y) = std::move(images);
    } else {
      throw ParseError("unexpected line in family file: " + line);
    }
  }
  if (!saw_header) {
    throw ParseError("missing family header");
  }
  return fam;
}

}  // namespace thetakit
