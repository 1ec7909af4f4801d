#include <doctest.h>

#include <stdexcept>

#include <hyptree/oracle.hpp>
#include <hyptree/queries.hpp>

#include <map>
#include <random>

#include "fixtures.hpp"

using namespace hyptree;
using hyptree::testing::monotone2_fixture;
using hyptree::testing::rows_of;
using hyptree::testing::sorting3_fixture;

TEST_SUITE_BEGIN("queries");

TEST_CASE("attribute answers split the sorting table") {
  auto t = sorting3_fixture();
  auto out = answers(full_subtable(t), Query::ask_attribute(0));
  REQUIRE(out.size() == 2);
  CHECK(out[0].first == Answer::value_is(0, 0));
  CHECK(out[0].second.members.count() == 3);
  CHECK(out[1].first == Answer::value_is(0, 1));
  CHECK(out[1].second.members.count() == 3);
}

TEST_CASE("hypothesis answers on the monotone table") {
  auto t = monotone2_fixture();
  auto out = answers(full_subtable(t), Query::ask_hypothesis(Hypothesis{{0, 0, 0, 0}}));
  REQUIRE(out.size() == 5);  // confirmed + one counterexample per binary attribute

  std::map<std::pair<std::size_t, Value>, std::size_t> counter_sizes;
  std::size_t confirmed_size = 0;
  for (const auto& [ans, child] : out) {
    if (ans.kind == AnswerKind::Confirmed)
      confirmed_size = child.members.count();
    else
      counter_sizes[{ans.attribute, ans.value}] = child.members.count();
  }
  CHECK(confirmed_size == 1);  // the constant-0 row
  CHECK(counter_sizes[{0, 1}] == 1);
  CHECK(counter_sizes[{1, 1}] == 3);
  CHECK(counter_sizes[{2, 1}] == 3);
  CHECK(counter_sizes[{3, 1}] == 5);
}

TEST_CASE("hypothesis equal to a lone member row leaves no counterexample") {
  auto t = sorting3_fixture();
  Subtable one{&t, rows_of(t, {4})};
  auto out = answers(one, Query::ask_hypothesis(Hypothesis{{1, 0, 0}}));
  for (const auto& [ans, child] : out) {
    if (ans.kind == AnswerKind::Confirmed)
      CHECK(child.members.count() == 1);
    else
      CHECK(child.members.empty());
  }
}

TEST_CASE("subtable-scope answers range over the remaining values") {
  auto t = sorting3_fixture();
  auto sub = restrict_by(full_subtable(t), 0, 1);  // s_1_2 constant 1 here
  auto original = answers(sub, Query::ask_attribute(0), HypothesisScope::OriginalDomains);
  auto local = answers(sub, Query::ask_attribute(0), HypothesisScope::SubtableDomains);
  CHECK(original.size() == 2);
  CHECK(local.size() == 1);
}

TEST_CASE("invalid queries are rejected") {
  auto t = sorting3_fixture();
  auto sub = full_subtable(t);
  CHECK_THROWS_AS(answers(sub, Query::ask_attribute(17)), std::invalid_argument);
  CHECK_THROWS_AS(answers(sub, Query::ask_hypothesis(Hypothesis{{1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(answers(sub, Query::ask_hypothesis(Hypothesis{{1, 1, 9}})),
                  std::invalid_argument);
  Subtable empty{&t, RowSet(t.row_count())};
  CHECK_THROWS_AS(answers(empty, Query::ask_attribute(0)), std::invalid_argument);
}

TEST_CASE("proper hypotheses") {
  auto t = monotone2_fixture();
  auto sub = full_subtable(t);
  CHECK(is_proper(sub, Hypothesis{{0, 0, 1, 1}}));         // the row of x1
  CHECK_FALSE(is_proper(sub, Hypothesis{{1, 0, 0, 0}}));   // not monotone, not a row
  Subtable one{&t, rows_of(t, {2})};
  CHECK(is_proper(one, Hypothesis{{0, 0, 1, 1}}));
  CHECK_FALSE(is_proper(one, Hypothesis{{0, 0, 0, 0}}, ProperScope::CurrentSubtable));
  CHECK(is_proper(one, Hypothesis{{0, 0, 0, 0}}, ProperScope::OriginalTable));
}

TEST_CASE("allowed queries per tree type") {
  auto t = sorting3_fixture();
  auto sub = full_subtable(t);
  Query attr = Query::ask_attribute(0);
  Query member = Query::ask_hypothesis(Hypothesis{{1, 1, 1}});
  Query nonrow = Query::ask_hypothesis(Hypothesis{{1, 0, 1}});

  CHECK(allowed(1, attr, sub));
  CHECK_FALSE(allowed(1, member, sub));
  CHECK_FALSE(allowed(2, attr, sub));
  CHECK(allowed(2, nonrow, sub));
  CHECK(allowed(3, attr, sub));
  CHECK(allowed(3, nonrow, sub));
  CHECK(allowed(4, member, sub));
  CHECK_FALSE(allowed(4, nonrow, sub));
  CHECK(allowed(5, attr, sub));
  CHECK(allowed(5, member, sub));
  CHECK_FALSE(allowed(5, nonrow, sub));
  CHECK_THROWS_AS(allowed(0, attr, sub), std::invalid_argument);
  CHECK_THROWS_AS(allowed(6, attr, sub), std::invalid_argument);
}

TEST_CASE("answers cover the members and counterexamples stay disjoint") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    DecisionTable t = random_table(rng, 7, 3, 2);
    auto sub = full_subtable(t);

    Hypothesis h;
    for (std::size_t a = 0; a < t.attribute_count(); ++a) {
      const auto& dom = t.domain(a);
      h.values.push_back(dom[rng() % dom.size()]);
    }
    auto out = answers(sub, Query::ask_hypothesis(h));

    RowSet covered(t.row_count());
    for (const auto& [ans, child] : out) covered |= child.members;
    CHECK(covered == sub.members);

    // counterexamples on one attribute are pairwise disjoint and exclude the
    // confirmed row
    for (std::size_t a = 0; a < t.attribute_count(); ++a) {
      RowSet seen(t.row_count());
      for (const auto& [ans, child] : out) {
        if (ans.kind != AnswerKind::Counterexample || ans.attribute != a) continue;
        CHECK(RowSet::and_count(seen, child.members) == 0);
        seen |= child.members;
      }
      int hyp_row = t.find_row(h.values);
      if (hyp_row >= 0) CHECK_FALSE(seen.test(static_cast<std::size_t>(hyp_row)));
    }
  }
}

TEST_SUITE_END();
