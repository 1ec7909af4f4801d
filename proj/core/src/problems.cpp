#include "hyptree/problems.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyptree {

namespace {

// f(a) <= f(a with one 0 flipped to 1) for every tuple and position covers
// the whole componentwise order by transitivity.
bool is_monotone(const std::vector<bool>& tt, int n) {
  const std::size_t size = tt.size();
  for (std::size_t t = 0; t < size; ++t) {
    if (!tt[t]) continue;
    for (int b = 0; b < n; ++b) {
      std::size_t bit = std::size_t{1} << (n - 1 - b);
      if (!(t & bit) && !tt[t | bit]) return false;
    }
  }
  return true;
}

void check_monotone_n(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("monotone recognition supports n = 1..4, got " + std::to_string(n));
}

std::string tuple_bits(std::size_t t, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int b = 0; b < n; ++b)
    if (t & (std::size_t{1} << (n - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
  return s;
}

}  // namespace

std::uint64_t MonotoneFunction::truth_int() const {
  std::uint64_t v = 0;
  for (bool bit : truth_table) v = (v << 1) | (bit ? 1 : 0);
  return v;
}

std::vector<MonotoneFunction> enumerate_monotone(int n) {
  check_monotone_n(n);
  const std::size_t tuples = std::size_t{1} << n;
  const std::uint64_t candidates = std::uint64_t{1} << tuples;

  std::vector<MonotoneFunction> out;
  // Candidate integers enumerate truth tables with f(0,...,0) as the most
  // significant bit, so the output is already ascending by truth_int.
  for (std::uint64_t c = 0; c < candidates; ++c) {
    std::vector<bool> tt(tuples);
    for (std::size_t t = 0; t < tuples; ++t)
      tt[t] = (c >> (tuples - 1 - t)) & 1;
    if (is_monotone(tt, n)) out.push_back(MonotoneFunction{n, std::move(tt)});
  }
  return out;
}

DecisionTable build_monotone_table(int n) {
  check_monotone_n(n);
  const std::size_t tuples = std::size_t{1} << n;

  std::vector<std::string> attrs;
  attrs.reserve(tuples);
  for (std::size_t t = 0; t < tuples; ++t) attrs.push_back("r_" + tuple_bits(t, n));

  std::vector<std::vector<Value>> rows;
  std::vector<std::string> decisions;
  for (const auto& f : enumerate_monotone(n)) {
    std::vector<Value> row(tuples);
    for (std::size_t t = 0; t < tuples; ++t) row[t] = f.value(t) ? 1 : 0;
    rows.push_back(std::move(row));
    decisions.push_back(std::to_string(f.truth_int()));
  }
  return DecisionTable(std::move(attrs), std::move(rows), std::move(decisions));
}

DecisionTable build_sorting_table(int n) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("sorting supports n = 2..7, got " + std::to_string(n));

  std::vector<std::string> attrs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      attrs.push_back("s_" + std::to_string(i) + "_" + std::to_string(j));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<std::vector<Value>> rows;
  std::vector<std::string> decisions;
  do {
    // position[e] = index of element e within the permutation tuple
    std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
    for (int idx = 0; idx < n; ++idx) position[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx)])] = idx;

    std::vector<Value> row;
    row.reserve(attrs.size());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        row.push_back(position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(j)] ? 1 : 0);
    rows.push_back(std::move(row));
    decisions.push_back(permutation_decision(Permutation{n, perm}));
  } while (std::next_permutation(perm.begin(), perm.end()));

  return DecisionTable(std::move(attrs), std::move(rows), std::move(decisions));
}

std::string monotone_formula(int n, std::uint64_t truth_int) {
  check_monotone_n(n);
  const std::size_t tuples = std::size_t{1} << n;
  std::vector<bool> tt(tuples);
  for (std::size_t t = 0; t < tuples; ++t) tt[t] = (truth_int >> (tuples - 1 - t)) & 1;

  if (std::none_of(tt.begin(), tt.end(), [](bool b) { return b; })) return "0";
  if (tt[0]) return "1";  // monotone and true on the all-zero tuple

  // Minimal true points form the terms of the monotone DNF.
  std::vector<std::vector<int>> terms;
  for (std::size_t t = 0; t < tuples; ++t) {
    if (!tt[t]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b) {
      std::size_t bit = std::size_t{1} << (n - 1 - b);
      if ((t & bit) && tt[t & ~bit]) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> vars;
    for (int b = 0; b < n; ++b)
      if (t & (std::size_t{1} << (n - 1 - b))) vars.push_back(b + 1);
    terms.push_back(std::move(vars));
  }
  std::sort(terms.begin(), terms.end());

  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < terms[i].size(); ++j) {
      if (j) out += "&";
      out += "x" + std::to_string(terms[i][j]);
    }
  }
  return out;
}

std::string permutation_decision(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.order[i]);
  }
  out += ")";
  return out;
}

}  // namespace hyptree
