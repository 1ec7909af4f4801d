#include <doctest.h>

#include <stdexcept>

#include <hyptree/oracle.hpp>
#include <hyptree/table_io.hpp>

#include <random>
#include <sstream>

#include "fixtures.hpp"

using namespace hyptree;

TEST_SUITE_BEGIN("table_io");

namespace {

DecisionTable roundtrip(const DecisionTable& t) {
  std::ostringstream out;
  save_table(out, t);
  std::istringstream in(out.str());
  return load_table(in);
}

}  // namespace

TEST_CASE("save/load reproduces the table exactly") {
  CHECK(roundtrip(hyptree::testing::sorting3_fixture()) == hyptree::testing::sorting3_fixture());
  CHECK(roundtrip(hyptree::testing::monotone2_fixture()) == hyptree::testing::monotone2_fixture());

  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    DecisionTable t = random_table(rng, 6, 3, 2);
    CHECK(roundtrip(t) == t);
  }
}

TEST_CASE("saving twice is byte-identical") {
  auto t = hyptree::testing::sorting3_fixture();
  std::ostringstream a, b;
  save_table(a, t);
  save_table(b, roundtrip(t));
  CHECK(a.str() == b.str());
}

TEST_CASE("decisions with spaces survive") {
  DecisionTable t({"f1"}, {{0}, {1}}, {"class one", " padded "});
  auto back = roundtrip(t);
  CHECK(back.decision(0) == "class one");
  CHECK(back.decision(1) == " padded ");
}

TEST_CASE("parse errors carry line context") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(load_table(in), std::runtime_error);
  };
  bad("not a table\n");
  bad("dtable 1\nattributes 2\nonly_one\nrows 1\n0 1 -> x\n");
  bad("dtable 1\nattributes 1\na\nrows 2\n0 -> x\n");          // missing row
  bad("dtable 1\nattributes 1\na\nrows 1\n0 x\n");             // missing arrow
  bad("dtable 1\nattributes 1\na\nrows 2\n0 -> x\n0 -> y\n");  // duplicate rows
}

TEST_CASE("csv import, last column is the decision") {
  std::istringstream in(
      "s_1_2,s_1_3,s_2_3,permutation\n"
      "1,1,1,(1 2 3)\n"
      "0,0,0,(3 2 1)\n");
  auto t = load_table_csv(in);
  CHECK(t.attribute_count() == 3);
  CHECK(t.attribute_name(0) == "s_1_2");
  CHECK(t.row_count() == 2);
  CHECK(t.decision(1) == "(3 2 1)");
  CHECK(t.cell(0, 2) == 1);
}

TEST_CASE("csv rejects bad cells") {
  std::istringstream ragged("a,b,d\n0,1,x\n0,y\n");
  CHECK_THROWS_AS(load_table_csv(ragged), std::runtime_error);
  std::istringstream negative("a,d\n-2,x\n");
  CHECK_THROWS_AS(load_table_csv(negative), std::runtime_error);
  std::istringstream empty("a,d\n");
  CHECK_THROWS_AS(load_table_csv(empty), std::runtime_error);
}

TEST_SUITE_END();
