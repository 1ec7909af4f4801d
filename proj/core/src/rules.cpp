#include "hyptree/rules.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hyptree {

namespace {

RowSet condition_mask(const DecisionTable& table, const Condition& c) {
  if (c.attribute >= table.attribute_count())
    throw std::invalid_argument("rule condition references attribute " +
                                std::to_string(c.attribute) + " outside the table");
  int di = table.domain_index(c.attribute, c.value);
  if (di < 0) return RowSet(table.row_count());
  return table.value_mask(c.attribute, static_cast<std::size_t>(di));
}

// Walks realizable paths, handing each terminal's reduced rule and member set
// to the sink. Shared by derive_rules and tree_rule_stats.
template <typename Sink>
void walk_rules(const DecisionTable& table, const DecisionTree& tree, Sink&& sink) {
  if (tree.empty() || table.row_count() == 0) return;

  std::vector<Condition> path;
  auto visit = [&](auto&& self, std::uint32_t id, const RowSet& rows) -> void {
    switch (tree.kind(id)) {
      case DecisionTree::NodeKind::Unreachable:
        return;  // no rule from an unreachable branch
      case DecisionTree::NodeKind::Leaf: {
        Rule raw{path, tree.decision_of(id)};
        sink(reduce_rule(table, raw), rows);
        return;
      }
      case DecisionTree::NodeKind::Query:
        break;
    }
    const Query& q = tree.query_of(id);
    std::size_t e = 0;
    for (const Answer& ans : query_answers(table, q)) {
      std::uint32_t child = tree.child(id, e++);
      if (answer_child_count(table, rows, q, ans) == 0) continue;
      std::size_t mark = path.size();
      switch (ans.kind) {
        case AnswerKind::ValueIs:
        case AnswerKind::Counterexample:
          path.push_back({ans.attribute, ans.value});
          break;
        case AnswerKind::Confirmed:
          for (std::size_t a = 0; a < table.attribute_count(); ++a)
            path.push_back({a, q.hypothesis.values[a]});
          break;
      }
      self(self, child, answer_child_rows(table, rows, q, ans));
      path.resize(mark);
    }
  };
  visit(visit, tree.root(), table.all_rows());
}

}  // namespace

Rule reduce_rule(const DecisionTable& table, const Rule& rule) {
  Rule out;
  out.decision = rule.decision;
  RowSet satisfied = table.all_rows();
  for (const Condition& c : rule.conditions) {
    RowSet mask = condition_mask(table, c);
    if (satisfied.is_subset_of(mask)) continue;  // implied by the retained prefix
    out.conditions.push_back(c);
    satisfied &= mask;
  }
  return out;
}

std::vector<Rule> derive_rules(const DecisionTable& table, const DecisionTree& tree) {
  std::vector<Rule> out;
  walk_rules(table, tree, [&](Rule r, const RowSet&) { out.push_back(std::move(r)); });
  return out;
}

RowSet satisfying_rows(const DecisionTable& table, const Rule& rule) {
  RowSet rows = table.all_rows();
  for (const Condition& c : rule.conditions) rows &= condition_mask(table, c);
  return rows;
}

double mean_min_length(const DecisionTable& table, const std::vector<Rule>& rules) {
  const std::size_t m = table.row_count();
  if (m == 0) return 0.0;
  std::vector<std::size_t> best(m, std::numeric_limits<std::size_t>::max());
  for (const Rule& r : rules) {
    std::size_t len = r.conditions.size();
    satisfying_rows(table, r).for_each([&](std::size_t row) {
      if (len < best[row]) best[row] = len;
    });
  }
  std::uint64_t total = 0;
  for (std::size_t row = 0; row < m; ++row) {
    if (best[row] == std::numeric_limits<std::size_t>::max())
      throw std::runtime_error("row " + std::to_string(row) + " (decision '" +
                               table.decision(row) + "') satisfies no rule");
    total += best[row];
  }
  return static_cast<double>(total) / static_cast<double>(m);
}

TreeRuleStats tree_rule_stats(const DecisionTable& table, const DecisionTree& tree) {
  TreeRuleStats stats;
  const std::size_t m = table.row_count();
  std::vector<std::size_t> best(m, std::numeric_limits<std::size_t>::max());
  walk_rules(table, tree, [&](const Rule& r, const RowSet& rows) {
    std::size_t len = r.conditions.size();
    ++stats.rule_count;
    if (stats.length_histogram.size() <= len) stats.length_histogram.resize(len + 1, 0);
    ++stats.length_histogram[len];
    // the reduced rule is satisfied by exactly the rows reaching this terminal
    rows.for_each([&](std::size_t row) {
      if (len < best[row]) best[row] = len;
    });
  });
  std::uint64_t total = 0;
  for (std::size_t row = 0; row < m; ++row) {
    if (best[row] == std::numeric_limits<std::size_t>::max())
      throw std::runtime_error("row " + std::to_string(row) + " (decision '" +
                               table.decision(row) + "') reaches no terminal of the tree");
    total += best[row];
  }
  stats.mean_min_length = m == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(m);
  return stats;
}

std::string format_rule(const DecisionTable& table, const Rule& rule) {
  std::string out;
  if (rule.conditions.empty()) {
    out = "true";
  } else {
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
      if (i) out += " & ";
      out += table.attribute_name(rule.conditions[i].attribute) + "=" +
             std::to_string(rule.conditions[i].value);
    }
  }
  out += " => " + rule.decision;
  return out;
}

std::string format_real2(double x) {
  double rounded = std::floor(x * 100.0 + 0.5) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded);
  return buf;
}

}  // namespace hyptree
