#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyptree/table.hpp"

namespace hyptree {

// Boolean function of n variables stored as 2^n bits. Bit t holds the value
// on the tuple whose binary reading (first variable most significant) is t.
struct MonotoneFunction {
  int n = 0;
  std::vector<bool> truth_table;

  bool value(std::size_t tuple) const { return truth_table[tuple]; }

  // Truth table read as a binary numeral with f(0,...,0) most significant,
  // so ascending integers coincide with lexicographic row order.
  std::uint64_t truth_int() const;
};

struct Permutation {
  int n = 0;
  std::vector<int> order;  // a permutation of 1..n
};

// All monotone Boolean functions of n variables, ascending by truth-table
// integer. Brute force over 2^(2^n) candidates; supports n = 1..4.
std::vector<MonotoneFunction> enumerate_monotone(int n);

// Recognition of monotone Boolean functions with n variables (n = 1..4):
// one attribute per input tuple, one row per monotone function, cell = the
// function's value on the tuple, decision = the truth-table integer.
DecisionTable build_monotone_table(int n);

// Sorting n pairwise-distinct elements (n = 2..7): attributes s_i_j for
// i < j with value 1 iff element i precedes element j, one row per
// permutation in lexicographic order, decision = the permutation tuple.
DecisionTable build_sorting_table(int n);

// Monotone DNF over the minimal true points, e.g. "x1&x2 | x3";
// constants render as "0" and "1".
std::string monotone_formula(int n, std::uint64_t truth_int);

std::string permutation_decision(const Permutation& p);

}  // namespace hyptree
