#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "thetakit/classification.hpp"

using namespace thetakit;
using tktest::load_fixture;
using tktest::make_semigroup;

TEST_CASE("tower_reaches_universal verdicts") {
  TowerVerdict lz = tower_reaches_universal(load_fixture("leftzero2.tbl"));
  CHECK(lz.reaches_universal);
  CHECK(lz.level == 1);

  TowerVerdict nil = tower_reaches_universal(load_fixture("nilpotent3.tbl"));
  CHECK(nil.reaches_universal);
  CHECK(nil.level == 2);

  TowerVerdict t = tower_reaches_universal(load_fixture("example1.tbl"));
  CHECK(!t.reaches_universal);
  CHECK(t.level == 1);  // stabilizes at three classes
}

TEST_CASE("ideals of the order-5 fixture") {
  Semigroup t = load_fixture("example1.tbl");
  auto ids = ideals(t);
  auto has = [&](const ElementSubset& k) {
    return std::find(ids.begin(), ids.end(), k) != ids.end();
  };
  CHECK(has({4}));           // {0}
  CHECK(has({2, 3, 4}));     // {u, v, 0}
  CHECK(has({0, 1, 2, 3, 4}));
  for (const auto& k : ids) {
    CHECK(is_ideal(t, k));
  }
}

TEST_CASE("a left zero semigroup has only itself as an ideal") {
  Semigroup lz = load_fixture("leftzero2.tbl");
  auto ids = ideals(lz);
  REQUIRE(ids.size() == 1);
  CHECK(ids[0] == ElementSubset{0, 1});
  CHECK(!is_ideal(lz, {0}));  // S*{0} = {0,1}
}

TEST_CASE("the trivial semigroup has one ideal") {
  auto ids = ideals(make_semigroup(1, {0}));
  REQUIRE(ids.size() == 1);
  CHECK(ids[0] == ElementSubset{0});
}

TEST_CASE("principal-ideal closure agrees with subset filtering") {
  for (int n = 1; n <= 3; ++n) {
    enumerate_labeled(n, [&](const Semigroup& s) {
      auto filtered = ideals(s);
      auto closed = detail::ideals_by_principal_closure(s);
      std::sort(closed.begin(), closed.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      REQUIRE(filtered == closed);
    });
  }
}

TEST_CASE("is_left_zero_sub") {
  Semigroup t = load_fixture("example1.tbl");
  CHECK(is_left_zero_sub(t, {4}));          // the zero alone
  CHECK(!is_left_zero_sub(t, {2, 3, 4}));   // u*v = 0 != u
  Semigroup lz = load_fixture("leftzero2.tbl");
  CHECK(is_left_zero_sub(lz, {0, 1}));
}

TEST_CASE("Rees quotients") {
  Semigroup t = load_fixture("example1.tbl");
  ReesQuotient q = rees_quotient(t, {2, 3, 4});
  CHECK(q.semigroup.order() == 3);
  CHECK(q.zero == 2);
  Semigroup table2 = load_fixture("example2_quotient.tbl");
  CHECK(q.semigroup.table().products == table2.table().products);

  ReesQuotient whole = rees_quotient(t, {0, 1, 2, 3, 4});
  CHECK(whole.semigroup.order() == 1);

  Semigroup nil = load_fixture("nilpotent3.tbl");
  ReesQuotient nq = rees_quotient(nil, {2});
  CHECK(nq.semigroup.table().products == nil.table().products);

  CHECK_THROWS_AS(rees_quotient(t, {2}), std::invalid_argument);
}

TEST_CASE("nilpotency index") {
  Semigroup nil = load_fixture("nilpotent3.tbl");
  CHECK(is_nilpotent(nil) == 3);
  CHECK(is_nilpotent(make_semigroup(1, {0})) == 1);
  Semigroup table2 = load_fixture("example2_quotient.tbl");
  CHECK(is_nilpotent(table2) == std::nullopt);  // e*e = e forever
  Semigroup lz = load_fixture("leftzero2.tbl");
  CHECK_THROWS_AS(is_nilpotent(lz), std::invalid_argument);  // no zero
}

TEST_CASE("extension decision with validated witnesses") {
  auto lz = is_extension_leftzero_by_nilpotent(load_fixture("leftzero2.tbl"));
  REQUIRE(lz.has_value());
  CHECK(lz->members == ElementSubset{0, 1});
  CHECK(lz->rees_nilpotency_index == 1);

  auto nil = is_extension_leftzero_by_nilpotent(load_fixture("nilpotent3.tbl"));
  REQUIRE(nil.has_value());
  CHECK(nil->members == ElementSubset{2});
  CHECK(nil->rees_nilpotency_index == 3);

  CHECK(!is_extension_leftzero_by_nilpotent(load_fixture("example1.tbl")));
  CHECK(!is_extension_leftzero_by_nilpotent(
      load_fixture("example2_quotient.tbl")));
}

TEST_CASE("every qualifying ideal revalidates, not only the first") {
  for (int n = 1; n <= 3; ++n) {
    enumerate_labeled(n, [&](const Semigroup& s) {
      for (const auto& k : ideals(s)) {
        if (!is_left_zero_sub(s, k)) {
          continue;
        }
        ReesQuotient q = rees_quotient(s, k);
        REQUIRE(!find_nonassociative_triple(q.semigroup.table()));
        if (auto m = is_nilpotent(q.semigroup)) {
          REQUIRE(power_set(q.semigroup, *m) ==
                  std::vector<Element>{q.zero});
          if (*m > 1) {
            REQUIRE(power_set(q.semigroup, *m - 1) !=
                    std::vector<Element>{q.zero});
          }
        }
      }
    });
  }
}

TEST_CASE("tower-universal iff left-zero-by-nilpotent, over the census") {
  for (int n = 1; n <= 3; ++n) {
    enumerate_labeled(n, [&](const Semigroup& s) {
      REQUIRE(theorem_equivalence_check(s));
    });
  }
}
