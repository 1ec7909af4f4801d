#pragma once

#include <hyptree/table.hpp>

#include <vector>

namespace hyptree::testing {

// The two benchmark tables at their smallest sizes, typed in literally so the
// generators are checked against independent data.

// Monotone recognition, n = 2: attributes r_00 r_01 r_10 r_11, six rows.
inline DecisionTable monotone2_fixture() {
  return DecisionTable(
      {"r_00", "r_01", "r_10", "r_11"},
      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}},
      {"0", "1", "3", "5", "7", "15"});
}

// Sorting, n = 3: attributes s_1_2 s_1_3 s_2_3, six permutation rows.
inline DecisionTable sorting3_fixture() {
  return DecisionTable(
      {"s_1_2", "s_1_3", "s_2_3"},
      {{1, 1, 1}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}, {1, 0, 0}, {0, 0, 0}},
      {"(1,2,3)", "(1,3,2)", "(2,1,3)", "(2,3,1)", "(3,1,2)", "(3,2,1)"});
}

inline RowSet rows_of(const DecisionTable& t, const std::vector<std::size_t>& idx) {
  RowSet s(t.row_count());
  for (auto i : idx) s.set(i);
  return s;
}

}  // namespace hyptree::testing
