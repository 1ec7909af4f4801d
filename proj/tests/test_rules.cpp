#include <doctest.h>

#include <stdexcept>

#include <hyptree/dp.hpp>
#include <hyptree/greedy.hpp>
#include <hyptree/oracle.hpp>
#include <hyptree/problems.hpp>
#include <hyptree/rules.hpp>

#include <random>

#include "fixtures.hpp"

using namespace hyptree;
using hyptree::testing::monotone2_fixture;
using hyptree::testing::sorting3_fixture;

TEST_SUITE_BEGIN("rules");

TEST_CASE("single terminal over a degenerate table gives one empty rule") {
  DecisionTable one({"f1"}, {{0}}, {"d"});
  DecisionTree t;
  t.set_root(t.add_leaf("d"));
  auto rules = derive_rules(one, t);
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].conditions.empty());
  CHECK(rules[0].decision == "d");
  CHECK(mean_min_length(one, rules) == 0.0);
  CHECK(format_rule(one, rules[0]) == "true => d");
}

TEST_CASE("a tree of unreachable branches yields no rules") {
  auto s3 = sorting3_fixture();
  DecisionTree t;
  t.set_root(t.unreachable_node());
  CHECK(derive_rules(s3, t).empty());
}

TEST_CASE("two-row sorting table") {
  auto s2 = build_sorting_table(2);
  auto tree = optimal_tree(s2, 1, CostModel::Depth);
  auto rules = derive_rules(s2, tree);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].conditions == std::vector<Condition>{{0, 0}});
  CHECK(rules[0].decision == "(2,1)");
  CHECK(rules[1].conditions == std::vector<Condition>{{0, 1}});
  CHECK(rules[1].decision == "(1,2)");
}

TEST_CASE("reduction drops a comparison implied by transitivity") {
  auto s3 = sorting3_fixture();
  Rule raw{{{0, 1}, {2, 1}, {1, 1}}, "(1,2,3)"};  // s_1_2=1, s_2_3=1, s_1_3=1
  Rule reduced = reduce_rule(s3, raw);
  CHECK(reduced.conditions == std::vector<Condition>{{0, 1}, {2, 1}});
  CHECK(satisfying_rows(s3, raw) == satisfying_rows(s3, reduced));
}

TEST_CASE("single conditions and duplicates") {
  auto s3 = sorting3_fixture();
  Rule single{{{1, 0}}, "x"};
  CHECK(reduce_rule(s3, single) == single);
  Rule dup{{{1, 0}, {0, 1}, {1, 0}}, "x"};
  CHECK(reduce_rule(s3, dup).conditions == std::vector<Condition>{{1, 0}, {0, 1}});
  Rule bad{{{9, 0}}, "x"};
  CHECK_THROWS_AS(reduce_rule(s3, bad), std::invalid_argument);
}

TEST_CASE("reduction preserves the satisfying rows on random rules") {
  std::mt19937 rng(55);
  int nontrivial = 0;
  for (int trial = 0; trial < 300; ++trial) {
    DecisionTable t = random_table(rng, 2 + rng() % 7, 2 + rng() % 3, 2);
    Rule raw;
    raw.decision = "d0";
    std::size_t len = 1 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i)
      raw.conditions.push_back(
          {rng() % t.attribute_count(), static_cast<Value>(rng() % 2)});
    Rule reduced = reduce_rule(t, raw);
    CHECK(satisfying_rows(t, raw) == satisfying_rows(t, reduced));
    CHECK(reduced.conditions.size() <= raw.conditions.size());
    if (reduced.conditions.size() < raw.conditions.size()) ++nontrivial;
    // no retained condition is implied by the retained conditions before it
    RowSet rows = t.all_rows();
    for (const Condition& c : reduced.conditions) {
      int di = t.domain_index(c.attribute, c.value);
      RowSet mask = di < 0 ? RowSet(t.row_count()) : t.value_mask(c.attribute, static_cast<std::size_t>(di));
      CHECK_FALSE(rows.is_subset_of(mask));
      rows &= mask;
    }
  }
  CHECK(nontrivial > 30);  // the generator must actually exercise reduction
}

TEST_CASE("published mean rule lengths for greedy type-1 trees") {
  auto s3 = sorting3_fixture();
  auto stats = tree_rule_stats(s3, greedy_tree(s3, 1));
  CHECK(stats.mean_min_length == doctest::Approx(16.0 / 6.0));
  CHECK(format_real2(stats.mean_min_length) == "2.67");

  auto r2 = monotone2_fixture();
  auto rstats = tree_rule_stats(r2, greedy_tree(r2, 1));
  CHECK(format_real2(rstats.mean_min_length) == "2.67");

  auto s4 = build_sorting_table(4);
  CHECK(format_real2(tree_rule_stats(s4, greedy_tree(s4, 1)).mean_min_length) == "4.67");
}

TEST_CASE("tree statistics agree with materialized rules") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    DecisionTable t = random_table(rng, 2 + rng() % 7, 2 + rng() % 3, 2);
    for (int k : {1, 2, 3}) {
      auto tree = greedy_tree(t, k);
      auto rules = derive_rules(t, tree);
      auto stats = tree_rule_stats(t, tree);
      CHECK(stats.rule_count == rules.size());
      CHECK(stats.mean_min_length == doctest::Approx(mean_min_length(t, rules)));
      std::uint64_t histogram_total = 0;
      for (auto c : stats.length_histogram) histogram_total += c;
      CHECK(histogram_total == rules.size());
    }
  }
}

TEST_CASE("appending rules never increases the mean minimum length") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    DecisionTable t = random_table(rng, 4 + rng() % 5, 2 + rng() % 3, 2);
    auto rules = derive_rules(t, greedy_tree(t, 3));
    double with_all = mean_min_length(t, rules);
    // drop a suffix but keep coverage by retrying until it still covers
    for (std::size_t keep = rules.size(); keep > 0; --keep) {
      std::vector<Rule> prefix(rules.begin(), rules.begin() + static_cast<std::ptrdiff_t>(keep));
      try {
        double shorter = mean_min_length(t, prefix);
        CHECK(shorter >= with_all - 1e-12);
      } catch (const std::runtime_error&) {
        break;  // a row lost coverage; smaller prefixes only lose more
      }
    }
  }
}

TEST_CASE("uncovered rows are reported") {
  auto s3 = sorting3_fixture();
  std::vector<Rule> rules{Rule{{{0, 1}}, "(1,2,3)"}};
  CHECK_THROWS_WITH_AS(mean_min_length(s3, rules),
                       doctest::Contains("satisfies no rule"), std::runtime_error);
}

TEST_CASE("round-half-up formatting") {
  CHECK(format_real2(13.0 / 6.0) == "2.17");
  CHECK(format_real2(16.0 / 6.0) == "2.67");
  CHECK(format_real2(2.0) == "2.00");
  CHECK(format_real2(2.005) == "2.01");
  CHECK(format_real2(2.004999) == "2.00");
}

TEST_SUITE_END();
