#include <doctest.h>

#include <hyptree/rowset.hpp>
#include <hyptree/table.hpp>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"

using namespace hyptree;
using hyptree::testing::monotone2_fixture;
using hyptree::testing::rows_of;
using hyptree::testing::sorting3_fixture;

TEST_SUITE_BEGIN("table");

TEST_CASE("rowset basics") {
  RowSet s(100);
  CHECK(s.empty());
  s.set(3);
  s.set(64);
  s.set(99);
  CHECK(s.count() == 3);
  CHECK(s.test(64));
  CHECK_FALSE(s.test(4));
  CHECK(s.first() == 3);

  RowSet t(100);
  t.set(64);
  t.set(5);
  CHECK(RowSet::and_count(s, t) == 1);
  CHECK((s & t).count() == 1);
  CHECK(t.is_subset_of(t));
  CHECK_FALSE(s.is_subset_of(t));

  RowSet full = RowSet::full(100);
  CHECK(full.count() == 100);
  CHECK(s.is_subset_of(full));

  std::vector<std::size_t> seen;
  s.for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{3, 64, 99});

  CHECK(RowSet::single(10, 7).count() == 1);
  CHECK(s.hash() != t.hash());
}

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(DecisionTable({"a"}, {{0}, {0}}, {"x", "y"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a"}, {{0}, {1}}, {"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a"}, {{-1}}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a"}, {{0, 1}}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a b"}, {{0}}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a", "a"}, {{0, 1}}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a"}, {{0}}, {"x\ny"}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTable({"a"}, {{0}}, {"x", "y"}), std::invalid_argument);
}

TEST_CASE("domains are exactly the column values") {
  auto t = sorting3_fixture();
  for (std::size_t a = 0; a < 3; ++a) CHECK(t.domain(a) == std::vector<Value>{0, 1});
  CHECK(t.domain_index(0, 1) == 1);
  CHECK(t.domain_index(0, 7) == -1);
  CHECK_THROWS_AS(t.domain(9), std::invalid_argument);
  CHECK(t.find_row({1, 1, 0}) == 1);
  CHECK(t.find_row({1, 1, 2}) == -1);
  CHECK(t.decision_count() == 6);
}

TEST_CASE("restrict on the sorting table") {
  auto t = sorting3_fixture();
  auto sub = restrict_by(full_subtable(t), 0, 1);  // s_1_2 = 1
  CHECK(sub.members == rows_of(t, {0, 1, 4}));     // (1,2,3) (1,3,2) (3,1,2)

  auto empty = restrict_by(full_subtable(t), 0, 5);
  CHECK(empty.members.empty());

  CHECK_THROWS_AS(restrict_by(full_subtable(t), 42, 0), std::invalid_argument);
}

TEST_CASE("restrict on the monotone table") {
  auto t = monotone2_fixture();
  auto sub = restrict_by(full_subtable(t), 0, 1);  // r_00 = 1: only the constant-1 row
  CHECK(sub.members.count() == 1);
  CHECK(t.decision(static_cast<std::size_t>(sub.members.first())) == "15");
  CHECK(is_degenerate(sub));
}

TEST_CASE("degeneracy") {
  auto t = sorting3_fixture();
  CHECK_FALSE(is_degenerate(full_subtable(t)));
  Subtable one{&t, rows_of(t, {2})};
  CHECK(is_degenerate(one));
  CHECK(degenerate_decision(one) == t.decision_id(2));
  Subtable empty{&t, RowSet(t.row_count())};
  CHECK_THROWS_AS(is_degenerate(empty), std::invalid_argument);
  CHECK_THROWS_AS(value_set(empty, 0), std::invalid_argument);
}

TEST_CASE("value_set") {
  auto r2 = monotone2_fixture();
  CHECK(value_set(full_subtable(r2), 3) == std::vector<Value>{0, 1});
  Subtable one{&r2, rows_of(r2, {4})};
  CHECK(value_set(one, 0) == std::vector<Value>{0});

  auto s3 = sorting3_fixture();
  auto sub = restrict_by(full_subtable(s3), 0, 1);
  CHECK(value_set(sub, 1) == std::vector<Value>{0, 1});  // s_1_3 on {123,132,312}
}

TEST_CASE("restrict is idempotent and commutes, and children partition") {
  auto t = sorting3_fixture();
  auto sub = full_subtable(t);

  auto once = restrict_by(sub, 1, 1);
  CHECK(restrict_by(once, 1, 1).members == once.members);

  auto ab = restrict_by(restrict_by(sub, 0, 1), 2, 0);
  auto ba = restrict_by(restrict_by(sub, 2, 0), 0, 1);
  CHECK(ab.members == ba.members);

  for (std::size_t a = 0; a < t.attribute_count(); ++a) {
    std::size_t total = 0;
    for (Value v : value_set(sub, a)) total += restrict_by(sub, a, v).members.count();
    CHECK(total == sub.members.count());
  }
}

TEST_CASE("benchmark columns carry both values") {
  for (const auto& t : {monotone2_fixture(), sorting3_fixture()})
    for (std::size_t a = 0; a < t.attribute_count(); ++a)
      CHECK(t.domain(a) == std::vector<Value>{0, 1});
}

TEST_SUITE_END();
