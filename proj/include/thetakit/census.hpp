// Exhaustive enumeration of small semigroups (labeled and up to
// isomorphism) and the property suite that runs the library's theorems
// over every one of them.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "classification.hpp"
#include "congruence.hpp"
#include "isomorphism.hpp"
#include "reconstruction.hpp"
#include "semigroup.hpp"

namespace thetakit {

class OrderTooLarge : public std::runtime_error {
 public:
  explicit OrderTooLarge(int n)
      : std::runtime_error("exhaustive enumeration refused for order " +
                           std::to_string(n)) {}
};

inline constexpr int kMaxExhaustiveOrder = 4;

namespace detail {

// Associativity instances that become fully determined once the cell
// (i, j) is filled are checked immediately; -1 marks an unset cell.
inline bool partial_associative_ok(const CayleyTable& t) {
  for (Element a = 0; a < t.order; ++a) {
    for (Element b = 0; b < t.order; ++b) {
      Element ab = t.at(a, b);
      if (ab < 0) {
        continue;
      }
      for (Element c = 0; c < t.order; ++c) {
        Element bc = t.at(b, c);
        if (bc < 0) {
          continue;
        }
        Element lhs = t.at(ab, c);
        Element rhs = t.at(a, bc);
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

inline void fill_cells(CayleyTable& t, int cell,
                       const std::function<void(const Semigroup&)>& emit) {
  int n = t.order;
  if (cell == n * n) {
    emit(Semigroup(t));
    return;
  }
  for (Element v = 0; v < n; ++v) {
    t.products[static_cast<std::size_t>(cell)] = v;
    if (partial_associative_ok(t)) {
      fill_cells(t, cell + 1, emit);
    }
  }
  t.products[static_cast<std::size_t>(cell)] = -1;
}

}  // namespace detail

// Every associative n x n table exactly once, in lexicographic
// (row-major) order of table cells.
inline void enumerate_labeled(
    int n, const std::function<void(const Semigroup&)>& emit) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw OrderTooLarge(n);
  }
  CayleyTable t;
  t.order = n;
  t.products.assign(static_cast<std::size_t>(n) * n, -1);
  detail::fill_cells(t, 0, emit);
}

inline std::vector<Semigroup> all_labeled(int n) {
  std::vector<Semigroup> out;
  enumerate_labeled(n, [&](const Semigroup& s) { out.push_back(s); });
  return out;
}

// One representative per canonical key, in order of first appearance.
inline std::vector<Semigroup> enumerate_iso_classes(int n) {
  std::vector<Semigroup> reps;
  std::map<std::string, int> seen;
  enumerate_labeled(n, [&](const Semigroup& s) {
    if (seen.try_emplace(canonical_key(s), 1).second) {
      reps.push_back(s);
    }
  });
  return reps;
}

struct PropertyResult {
  std::string name;
  long pass = 0;
  long fail = 0;
  long skipped = 0;  // pair-search instances over budget
  std::optional<CayleyTable> first_failure;
};

struct CensusReport {
  int order = 0;
  long labeled_count = 0;
  long iso_class_count = 0;
  std::vector<PropertyResult> properties;

  bool all_pass() const {
    for (const auto& p : properties) {
      if (p.fail > 0) {
        return false;
      }
    }
    return true;
  }
};

namespace detail {

inline bool check_direct_theta_matches_tower(const Semigroup& s) {
  ThetaTower tw = tower(s);
  for (int n = 1; n <= tw.stabilization_index + 1; ++n) {
    if (!(theta_n_direct(s, n) == tw.level(n))) {
      return false;
    }
  }
  return true;
}

inline bool check_final_quotient_left_reductive(const Semigroup& s) {
  return is_left_reductive(tower(s).final_quotient());
}

inline bool check_canonical_build(const Semigroup& s) {
  CanonicalDerivation d = canonical_derivation(s);
  Semigroup built = build_product(d.quotient, d.fibers, d.family);
  if (!verify_fiber_containment(built, d.fibers)) {
    return false;
  }
  if (is_left_reductive(d.quotient) &&
      !verify_classes_exact(d.quotient, built, d.fibers)) {
    return false;
  }
  return true;
}

// 0 = agree, 1 = disagree, 2 = over budget
inline int check_obstruction_vs_search(const Semigroup& s,
                                       std::uint64_t budget) {
  bool witness = pairwise_obstruction(s).has_value();
  try {
    bool found = exhaustive_pairwise_search(s, budget).has_value();
    return witness == !found ? 0 : 1;
  } catch (const BudgetExceeded&) {
    return 2;
  }
}

}  // namespace detail

// Runs the full property suite over every labeled semigroup of order n.
inline CensusReport run_suite(int n, int jobs = 1,
                              std::uint64_t pair_search_budget = 1'000'000) {
  std::vector<Semigroup> all = all_labeled(n);
  CensusReport report;
  report.order = n;
  report.labeled_count = static_cast<long>(all.size());
  {
    std::map<std::string, int> seen;
    for (const auto& s : all) {
      seen.try_emplace(canonical_key(s), 1);
    }
    report.iso_class_count = static_cast<long>(seen.size());
  }

  struct Check {
    std::string name;
    std::function<int(const Semigroup&)> run;  // 0 pass, 1 fail, 2 skip
  };
  auto as_bool = [](bool ok) { return ok ? 0 : 1; };
  std::vector<Check> checks = {
      {"direct_theta_matches_tower",
       [&](const Semigroup& s) {
         return as_bool(detail::check_direct_theta_matches_tower(s));
       }},
      {"final_quotient_left_reductive",
       [&](const Semigroup& s) {
         return as_bool(detail::check_final_quotient_left_reductive(s));
       }},
      {"rebuild_round_trip",
       [&](const Semigroup& s) { return as_bool(rebuild_and_compare(s)); }},
      {"canonical_build_fibers",
       [&](const Semigroup& s) {
         return as_bool(detail::check_canonical_build(s));
       }},
      {"universal_iff_leftzero_by_nilpotent",
       [&](const Semigroup& s) {
         return as_bool(theorem_equivalence_check(s));
       }},
      {"obstruction_matches_search",
       [&](const Semigroup& s) {
         return detail::check_obstruction_vs_search(s, pair_search_budget);
       }},
  };

  for (const auto& check : checks) {
    PropertyResult pr;
    pr.name = check.name;
    if (jobs <= 1) {
      for (const auto& s : all) {
        int r = check.run(s);
        if (r == 0) {
          ++pr.pass;
        } else if (r == 2) {
          ++pr.skipped;
        } else {
          ++pr.fail;
          if (!pr.first_failure) {
            pr.first_failure = s.table();
          }
        }
      }
    } else {
      std::vector<std::vector<int>> results(
          static_cast<std::size_t>(jobs));
      std::vector<std::thread> workers;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
          auto& mine = results[static_cast<std::size_t>(w)];
          for (std::size_t i = static_cast<std::size_t>(w); i < all.size();
               i += static_cast<std::size_t>(jobs)) {
            mine.push_back(check.run(all[i]) * 1000000 +
                           static_cast<int>(i));
          }
        });
      }
      for (auto& t : workers) {
        t.join();
      }
      int first_fail = -1;
      for (const auto& mine : results) {
        for (int packed : mine) {
          int r = packed / 1000000;
          int i = packed % 1000000;
          if (r == 0) {
            ++pr.pass;
          } else if (r == 2) {
            ++pr.skipped;
          } else {
            ++pr.fail;
            if (first_fail == -1 || i < first_fail) {
              first_fail = i;
            }
          }
        }
      }
      if (first_fail >= 0) {
        pr.first_failure = all[static_cast<std::size_t>(first_fail)].table();
      }
    }
    report.properties.push_back(std::move(pr));
  }
  return report;
}

inline std::string format_report(const CensusReport& r) {
  std::ostringstream out;
  out << "order=" << r.order << '\n';
  out << "labeled_count=" << r.labeled_count << '\n';
  out << "iso_class_count=" << r.iso_class_count << '\n';
  for (const auto& p : r.properties) {
    out << "property." << p.name << ".pass=" << p.pass << '\n';
    out << "property." << p.name << ".fail=" << p.fail << '\n';
    if (p.skipped > 0) {
      out << "property." << p.name << ".skipped=" << p.skipped << '\n';
    }
    if (p.first_failure) {
      out << "property." << p.name << ".first_failure:\n"
          << format_cayley_table(*p.first_failure);
    }
  }
  out << "all_pass=" << (r.all_pass() ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace thetakit
