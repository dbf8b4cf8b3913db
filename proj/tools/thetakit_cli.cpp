// Command line front end: table parsing, theta analyses, the
// counterexample search, classification and the census suite.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetakit/thetakit.hpp"

namespace tk = thetakit;

namespace {

constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;

tk::Semigroup load(const std::string& path) {
  return tk::Semigroup(tk::parse_cayley_table_file(path));
}

std::string join_names(const tk::Semigroup& s,
                       const std::vector<tk::Element>& elems) {
  std::string out;
  for (tk::Element e : elems) {
    if (!out.empty()) {
      out += " ";
    }
    out += s.name_of(e);
  }
  return out;
}

int cmd_check(const std::string& path, bool porcelain) {
  tk::CayleyTable t = tk::parse_cayley_table_file(path);
  if (auto w = tk::find_nonassociative_triple(t)) {
    if (porcelain) {
      std::cout << "associative=false\n"
                << "witness=" << t.name_of(w->a) << " " << t.name_of(w->b)
                << " " << t.name_of(w->c) << "\n";
    } else {
      std::cout << "not associative: (" << t.name_of(w->a) << "*"
                << t.name_of(w->b) << ")*" << t.name_of(w->c) << "="
                << t.name_of(w->left) << " but " << t.name_of(w->a) << "*("
                << t.name_of(w->b) << "*" << t.name_of(w->c) << ")="
                << t.name_of(w->right) << "\n";
    }
    return kExitVerdictFalse;
  }
  if (porcelain) {
    std::cout << "associative=true\norder=" << t.order << "\n";
  } else {
    std::cout << "associative order=" << t.order << "\n";
  }
  return 0;
}

int cmd_theta(const std::string& path, bool porcelain) {
  tk::Semigroup s = load(path);
  tk::Congruence th = tk::theta(s);
  if (porcelain) {
    std::cout << "blocks=" << th.partition.num_blocks << "\n"
              << "partition=" << tk::format_partition(th.partition) << "\n";
  } else {
    std::cout << tk::format_partition(th.partition) << "\n";
  }
  return 0;
}

int cmd_tower(const std::string& path, bool porcelain) {
  tk::Semigroup s = load(path);
  tk::ThetaTower tw = tk::tower(s);
  std::cout << "stabilization_index=" << tw.stabilization_index << "\n";
  for (std::size_t i = 0; i < tw.levels.size(); ++i) {
    std::cout << "level." << i << "="
              << tk::format_partition(tw.levels[i].partition) << "\n";
  }
  if (!porcelain) {
    for (std::size_t i = 0; i < tw.quotients.size(); ++i) {
      std::cout << "quotient " << i << " (order "
                << tw.quotients[i].semigroup.order() << "):\n"
                << tk::format_cayley_table(tw.quotients[i].semigroup.table());
    }
  } else {
    std::cout << "final_left_reductive="
              << (tk::is_left_reductive(tw.final_quotient()) ? "true"
                                                             : "false")
              << "\n";
  }
  return 0;
}

int cmd_quotient(const std::string& path, bool porcelain) {
  tk::Semigroup s = load(path);
  tk::Congruence th = tk::theta(s);
  tk::QuotientResult q = tk::quotient(s, th);
  if (porcelain) {
    std::cout << "partition=" << tk::format_partition(th.partition) << "\n"
              << "order=" << q.semigroup.order() << "\n";
  }
  std::cout << tk::format_cayley_table(q.semigroup.table());
  return 0;
}

int cmd_reconstruct(const std::string& path, bool porcelain) {
  tk::Semigroup s = load(path);
  tk::CanonicalDerivation d = tk::canonical_derivation(s);
  std::cout << tk::format_family(d.fibers, d.family);
  bool ok = tk::rebuild_and_compare(s);
  if (porcelain) {
    std::cout << "rebuild=" << (ok ? "true" : "false") << "\n";
  } else {
    std::cout << (ok ? "rebuild: exact match"
                     : "rebuild: MISMATCH (theorem violation)")
              << "\n";
  }
  return 0;
}

int cmd_obstruct(const std::string& path, bool porcelain,
                 std::uint64_t budget) {
  tk::Semigroup s = load(path);
  auto w = tk::pairwise_obstruction(s);
  if (porcelain) {
    std::cout << "witness="
              << (w ? join_names(s, {w->a, w->b, w->b_alt}) : "none") << "\n";
  } else if (w) {
    std::cout << "witness a=" << s.name_of(w->a) << " b=" << s.name_of(w->b)
              << " b'=" << s.name_of(w->b_alt) << "\n";
  } else {
    std::cout << "witness none\n";
  }
  std::string verdict;
  try {
    auto fam = tk::exhaustive_pairwise_search(s, budget);
    verdict = fam ? "found" : "none_found";
  } catch (const tk::BudgetExceeded& e) {
    verdict = "budget_exceeded";
  }
  if (porcelain) {
    std::cout << "exhaustive=" << verdict << "\n";
  } else {
    std::cout << "exhaustive: " << verdict << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, bool porcelain) {
  tk::Semigroup s = load(path);
  tk::ThetaTower tw = tk::tower(s);
  tk::TowerVerdict tv = tk::tower_reaches_universal(s);
  auto witness = tk::is_extension_leftzero_by_nilpotent(s);
  std::cout << "stabilization_index=" << tw.stabilization_index << "\n"
            << "reaches_universal=" << (tv.reaches_universal ? "true" : "false")
            << "\n";
  if (tv.reaches_universal) {
    std::cout << "universal_level=" << tv.level << "\n";
  }
  if (witness) {
    std::cout << "ideal=" << join_names(s, witness->members) << "\n"
              << "nilpotency_index=" << *witness->rees_nilpotency_index
              << "\n";
  } else {
    std::cout << "ideal=none\n";
  }
  bool eq = tv.reaches_universal == witness.has_value();
  if (porcelain) {
    std::cout << "equivalence=" << (eq ? "true" : "false") << "\n";
  } else {
    std::cout << "equivalence " << (eq ? "holds" : "FAILS") << "\n";
  }
  return 0;
}

int cmd_iso(const std::string& path_a, const std::string& path_b,
            bool porcelain) {
  tk::Semigroup a = load(path_a);
  tk::Semigroup b = load(path_b);
  auto w = tk::are_isomorphic(a, b);
  if (!w) {
    std::cout << (porcelain ? "witness=none" : "none") << "\n";
    return 0;
  }
  std::ostringstream perm;
  for (std::size_t i = 0; i < w->mapping.size(); ++i) {
    perm << (i ? " " : "") << w->mapping[i];
  }
  if (porcelain) {
    std::cout << "witness=" << perm.str() << "\n";
  } else {
    std::cout << perm.str() << "\n";
  }
  return 0;
}

int cmd_census(int n, bool iso, bool suite, int jobs) {
  if (suite) {
    std::cout << tk::format_report(tk::run_suite(n, jobs));
    return 0;
  }
  long labeled = 0;
  tk::enumerate_labeled(n, [&](const tk::Semigroup&) { ++labeled; });
  std::cout << "order=" << n << "\n"
            << "labeled_count=" << labeled << "\n";
  if (iso) {
    std::cout << "iso_class_count=" << tk::enumerate_iso_classes(n).size()
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup theta-congruence toolkit"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "machine-readable key=value output");

  std::string table_path, table_path_b;
  std::uint64_t budget = 1'000'000;
  int census_order = 0;
  bool census_iso = false, census_suite = false;
  int jobs = 1;

  auto* check = app.add_subcommand("check", "validate associativity");
  check->add_option("table", table_path)->required();

  auto* theta = app.add_subcommand("theta", "theta(S) partition");
  theta->add_option("table", table_path)->required();

  auto* tower = app.add_subcommand("tower", "stabilizing theta tower");
  tower->add_option("table", table_path)->required();

  auto* quot = app.add_subcommand("quotient", "S/theta(S) table");
  quot->add_option("table", table_path)->required();

  auto* recon =
      app.add_subcommand("reconstruct", "canonical family and rebuild");
  recon->add_option("table", table_path)->required();

  auto* obstruct = app.add_subcommand(
      "obstruct", "pair-indexed obstruction witness and exhaustive search");
  obstruct->add_option("table", table_path)->required();
  obstruct->add_option("--budget", budget, "candidate family budget");

  auto* classify =
      app.add_subcommand("classify", "tower-universal classification");
  classify->add_option("table", table_path)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism witness");
  iso->add_option("tableA", table_path)->required();
  iso->add_option("tableB", table_path_b)->required();

  auto* census = app.add_subcommand("census", "enumerate small semigroups");
  census->add_option("order", census_order)->required();
  census->add_flag("--iso", census_iso, "count isomorphism classes");
  census->add_flag("--suite", census_suite, "run the property suite");
  census->add_option("--jobs", jobs, "worker threads for the suite");

  auto* suite = app.add_subcommand("suite", "property suite over a census");
  suite->add_option("order", census_order)->required();
  suite->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return cmd_check(table_path, porcelain);
    }
    if (theta->parsed()) {
      return cmd_theta(table_path, porcelain);
    }
    if (tower->parsed()) {
      return cmd_tower(table_path, porcelain);
    }
    if (quot->parsed()) {
      return cmd_quotient(table_path, porcelain);
    }
    if (recon->parsed()) {
      return cmd_reconstruct(table_path, porcelain);
    }
    if (obstruct->parsed()) {
      return cmd_obstruct(table_path, porcelain, budget);
    }
    if (classify->parsed()) {
      return cmd_classify(table_path, porcelain);
    }
    if (iso->parsed()) {
      return cmd_iso(table_path, table_path_b, porcelain);
    }
    if (census->parsed()) {
      return cmd_census(census_order, census_iso, census_suite, jobs);
    }
    if (suite->parsed()) {
      return cmd_census(census_order, false, true, jobs);
    }
  } catch (const tk::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const tk::NonAssociativeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const tk::OrderTooLarge& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
