#include <doctest.h>

#include <stdexcept>

#include <hyptree/dp.hpp>
#include <hyptree/oracle.hpp>
#include <hyptree/tree.hpp>
#include <hyptree/tree_io.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"

using namespace hyptree;
using hyptree::testing::sorting3_fixture;

TEST_SUITE_BEGIN("tree");

namespace {

// s_1_2 root with two leaves: the minimal sorting tree for n = 2
DecisionTree two_leaf_tree(const std::string& left, const std::string& right) {
  DecisionTree t;
  auto l0 = t.add_leaf(left);
  auto l1 = t.add_leaf(right);
  t.set_root(t.add_query_node(Query::ask_attribute(0), {l0, l1}));
  return t;
}

}  // namespace

TEST_CASE("single terminal") {
  DecisionTable one({"f1"}, {{0}}, {"only"});
  DecisionTree t;
  t.set_root(t.add_leaf("only"));
  CHECK(depth(t) == 0);
  CHECK(realizable_count(one, t) == 1);
  CHECK(validate_solves(one, t).ok);
}

TEST_CASE("two-leaf attribute tree over the two-element sorting table") {
  DecisionTable s2({"s_1_2"}, {{1}, {0}}, {"(1,2)", "(2,1)"});
  auto t = two_leaf_tree("(2,1)", "(1,2)");  // edge order follows the domain 0,1
  CHECK(depth(t) == 1);
  CHECK(realizable_count(s2, t) == 3);
  CHECK(validate_solves(s2, t).ok);

  auto wrong = two_leaf_tree("(1,2)", "(2,1)");
  auto v = validate_solves(s2, wrong);
  CHECK_FALSE(v.ok);
  CHECK(v.node != DecisionTree::kNoNode);
  CHECK(v.message.find("(1,2)") != std::string::npos);
}

TEST_CASE("edge sets must match the query's answers") {
  DecisionTable s2({"s_1_2"}, {{1}, {0}}, {"(1,2)", "(2,1)"});
  DecisionTree t;
  auto leaf = t.add_leaf("(2,1)");
  t.set_root(t.add_query_node(Query::ask_attribute(0), {leaf}));  // one edge, two answers
  CHECK_FALSE(validate_solves(s2, t).ok);
  CHECK_THROWS_AS(realizable_count(s2, t), std::invalid_argument);
}

TEST_CASE("hypothesis node edges and unreachable sharing") {
  auto s3 = sorting3_fixture();
  DecisionTree t;
  // Root hypothesis (0,0,0): confirmed -> (3,2,1); each counterexample child
  // holds three rows and one more hypothesis finishes it. Edges follow the
  // canonical order: confirmed, then per attribute the other value.
  auto hyp_node = [&](std::vector<Value> delta, std::vector<std::uint32_t> kids) {
    return t.add_query_node(Query::ask_hypothesis(Hypothesis{std::move(delta)}), kids);
  };
  auto leaf = [&](const char* d) { return t.add_leaf(d); };
  auto none = [&]() { return t.unreachable_node(); };

  // rows {123,132,312}, hypothesis (1,1,0): edges conf, s12=0, s13=0, s23=1
  auto c12 = hyp_node({1, 1, 0}, {leaf("(1,3,2)"), none(), leaf("(3,1,2)"), leaf("(1,2,3)")});
  // rows {123,132,213}, hypothesis (1,1,1): edges conf, s12=0, s13=0, s23=0
  auto c13 = hyp_node({1, 1, 1}, {leaf("(1,2,3)"), leaf("(2,1,3)"), none(), leaf("(1,3,2)")});
  // rows {123,213,231}, hypothesis (0,1,1): edges conf, s12=1, s13=0, s23=0
  auto c23 = hyp_node({0, 1, 1}, {leaf("(2,1,3)"), leaf("(1,2,3)"), leaf("(2,3,1)"), none()});
  t.set_root(hyp_node({0, 0, 0}, {leaf("(3,2,1)"), c12, c13, c23}));

  CHECK(depth(t) == 2);
  // this is the greedy type-2 construction; 14 realizable nodes
  CHECK(realizable_count(s3, t) == 14);
  auto v = validate_solves(s3, t);
  INFO(v.message);
  CHECK(v.ok);
}

TEST_CASE("same_structure distinguishes labels and shapes") {
  auto a = two_leaf_tree("x", "y");
  auto b = two_leaf_tree("x", "y");
  auto c = two_leaf_tree("y", "x");
  CHECK(a.same_structure(b));
  CHECK_FALSE(a.same_structure(c));
}

TEST_CASE("tree file round trip") {
  auto s3 = sorting3_fixture();
  DpEngine engine(s3);
  for (int k : {1, 3, 4}) {
    auto tree = engine.optimal_tree(k, CostModel::RealizableNodes);
    std::ostringstream out;
    save_tree(out, s3, tree);
    std::istringstream in(out.str());
    auto back = load_tree(in, s3);
    CHECK(tree.same_structure(back));
    std::ostringstream out2;
    save_tree(out2, s3, back);
    CHECK(out.str() == out2.str());
  }
}

TEST_CASE("tree file rejects non-canonical edge order") {
  auto s3 = sorting3_fixture();
  std::istringstream in(
      "dtree 1\n"
      "node ask 0 2\n"
      "edge val 1\n"
      "node leaf a\n"
      "edge val 0\n"
      "node leaf b\n");
  CHECK_THROWS_AS(load_tree(in, s3), std::runtime_error);
}

TEST_CASE("decision-with-spaces survives the tree format") {
  DecisionTable one({"f1"}, {{0}, {1}}, {"left label", "right label"});
  DecisionTree t;
  auto l0 = t.add_leaf("left label");
  auto l1 = t.add_leaf("right label");
  t.set_root(t.add_query_node(Query::ask_attribute(0), {l0, l1}));
  std::ostringstream out;
  save_tree(out, one, t);
  std::istringstream in(out.str());
  CHECK(load_tree(in, one).same_structure(t));
}

TEST_CASE("attribute-only trees over binary tables have an odd realizable count") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    DecisionTable t = random_table(rng, 2 + rng() % 7, 2 + rng() % 3, 2);
    auto tree = optimal_tree(t, 1, CostModel::RealizableNodes);
    auto count = realizable_count(t, tree);
    CHECK(count % 2 == 1);
    CHECK(count >= static_cast<std::int64_t>(t.decision_count()));
    // information bound for binary attribute trees
    CHECK(depth(tree) >=
          static_cast<int>(std::ceil(std::log2(static_cast<double>(t.decision_count())))));
  }
}

TEST_SUITE_END();
