#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyptree/table.hpp"
#include "hyptree/tree.hpp"

namespace hyptree {

struct Condition {
  std::size_t attribute = 0;
  Value value = 0;

  bool operator==(const Condition&) const = default;
};

// Ordered attribute=value conditions plus a decision.
struct Rule {
  std::vector<Condition> conditions;
  std::string decision;

  bool operator==(const Rule&) const = default;
};

// Drops every condition already implied, relative to the full table, by the
// previously retained ones; the satisfying row set is unchanged.
Rule reduce_rule(const DecisionTable& table, const Rule& rule);

// One reduced rule per realizable root-to-terminal path. A value answer or a
// counterexample contributes its single condition; a confirmed hypothesis
// contributes one condition per attribute, in attribute order. Unreachable
// branches contribute nothing.
std::vector<Rule> derive_rules(const DecisionTable& table, const DecisionTree& tree);

// Table rows satisfying every condition of the rule.
RowSet satisfying_rows(const DecisionTable& table, const Rule& rule);

// Mean over rows of the minimum condition count among the rules the row
// satisfies. Throws if some row satisfies no rule.
double mean_min_length(const DecisionTable& table, const std::vector<Rule>& rules);

struct TreeRuleStats {
  std::uint64_t rule_count = 0;
  std::vector<std::uint64_t> length_histogram;  // index = reduced length
  double mean_min_length = 0.0;
};

// Same statistics as deriving all rules and averaging, computed in one tree
// traversal so multi-million-node trees need no materialized rule list.
TreeRuleStats tree_rule_stats(const DecisionTable& table, const DecisionTree& tree);

std::string format_rule(const DecisionTable& table, const Rule& rule);

// Round-half-up rendering with two decimals, e.g. 16/6 -> "2.67".
std::string format_real2(double x);

}  // namespace hyptree
