#include "hyptree/greedy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hyptree {

namespace {

constexpr double kScoreEps = 1e-9;

struct Candidate {
  Query query;
  double worst_child = 0.0;  // largest entropy among realizable children
  double total = 0.0;        // size-weighted child entropy
  std::size_t realizable = 0;
  bool valid = false;
};

// strict preference under the epsilon tie band
bool better(const Candidate& challenger, const Candidate& incumbent) {
  if (!incumbent.valid) return true;
  if (challenger.worst_child < incumbent.worst_child - kScoreEps) return true;
  if (challenger.worst_child > incumbent.worst_child + kScoreEps) return false;
  if (challenger.total < incumbent.total - kScoreEps) return true;
  if (challenger.total > incumbent.total + kScoreEps) return false;
  if (challenger.realizable != incumbent.realizable)
    return challenger.realizable < incumbent.realizable;
  bool ca = challenger.query.kind == QueryKind::Attribute;
  bool ia = incumbent.query.kind == QueryKind::Attribute;
  if (ca != ia) return ca;
  if (ca && ia) return challenger.query.attribute < incumbent.query.attribute;
  return false;
}

struct Builder {
  const DecisionTable& table;
  int k;
  GreedyConfig config;
  DecisionTree tree;

  Candidate score_query(const RowSet& rows, Query q) const {
    Candidate c;
    c.valid = true;
    std::size_t parent = rows.count();
    for (const Answer& ans : query_answers(table, q)) {
      std::size_t cnt = answer_child_count(table, rows, q, ans);
      if (cnt == 0) continue;
      if (cnt == parent) throw std::logic_error("greedy candidate makes no progress");
      ++c.realizable;
      if (ans.kind == AnswerKind::Confirmed || cnt == 1) continue;  // entropy 0
      RowSet child = answer_child_rows(table, rows, q, ans);
      double e = entropy(Subtable{&table, child});
      c.worst_child = std::max(c.worst_child, e);
      c.total += static_cast<double>(cnt) * e;
    }
    c.query = std::move(q);
    return c;
  }

  std::uint32_t build(const RowSet& rows) {
    Subtable sub{&table, rows};
    int dec = degenerate_decision(sub);
    if (dec >= 0) return tree.add_leaf(table.decision_name(dec));

    Candidate best;
    if (!tree_type_allows_attributes(k)) {
      // single candidate, nothing to score
      best.query = Query::ask_hypothesis(candidate_hypothesis(sub, k, config.proper_scope));
      best.valid = true;
    } else {
      for (std::size_t a = 0; a < table.attribute_count(); ++a) {
        if (value_set(sub, a).size() < 2) continue;  // constant on this subtable
        Candidate c = score_query(rows, Query::ask_attribute(a));
        if (better(c, best)) best = std::move(c);
      }
      if (tree_type_allows_hypotheses(k)) {
        Hypothesis h = candidate_hypothesis(sub, k, config.proper_scope);
        Candidate c = score_query(rows, Query::ask_hypothesis(std::move(h)));
        if (better(c, best)) best = std::move(c);
      }
    }
    if (!best.valid) throw std::logic_error("no query available on a nondegenerate subtable");

    std::vector<std::uint32_t> children;
    for (const Answer& ans : query_answers(table, best.query)) {
      if (answer_child_count(table, rows, best.query, ans) == 0) {
        children.push_back(tree.unreachable_node());
        continue;
      }
      children.push_back(build(answer_child_rows(table, rows, best.query, ans)));
    }
    return tree.add_query_node(best.query, children);
  }
};

}  // namespace

double entropy(const Subtable& sub) {
  if (sub.members.empty())
    throw std::invalid_argument("entropy is undefined for an empty subtable");
  const DecisionTable& t = *sub.base;
  std::vector<std::size_t> counts(t.decision_count(), 0);
  std::vector<int> touched;
  std::size_t total = 0;
  sub.members.for_each([&](std::size_t r) {
    int d = t.decision_id(r);
    if (counts[static_cast<std::size_t>(d)]++ == 0) touched.push_back(d);
    ++total;
  });
  double h = 0.0;
  for (int d : touched) {
    double p = static_cast<double>(counts[static_cast<std::size_t>(d)]) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

Hypothesis candidate_hypothesis(const Subtable& sub, int tree_type, ProperScope scope) {
  if (!tree_type_allows_hypotheses(tree_type))
    throw std::invalid_argument("tree type " + std::to_string(tree_type) +
                                " admits no hypothesis query");
  if (sub.members.empty())
    throw std::invalid_argument("candidate hypothesis is undefined for an empty subtable");
  const DecisionTable& t = *sub.base;
  const std::size_t n = t.attribute_count();

  Hypothesis majority;
  majority.values.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t best_count = 0;
    Value best_value = 0;
    const auto& dom = t.domain(a);
    for (std::size_t di = 0; di < dom.size(); ++di) {
      std::size_t cnt = RowSet::and_count(sub.members, t.value_mask(a, di));
      if (cnt > best_count) {  // ascending domain order; ties keep the smaller value
        best_count = cnt;
        best_value = dom[di];
      }
    }
    majority.values[a] = best_value;
  }
  if (!tree_type_requires_proper(tree_type)) return majority;

  // Closest candidate row to the majority vector. Under the original-table
  // scope, rows disagreeing with a constant column would answer with the
  // whole subtable again, so they are not candidates.
  std::vector<int> constant_di(n, -1);
  if (scope == ProperScope::OriginalTable) {
    for (std::size_t a = 0; a < n; ++a) {
      int seen = -1;
      bool constant = true;
      for (std::size_t di = 0; di < t.domain(a).size() && constant; ++di) {
        if (RowSet::and_count(sub.members, t.value_mask(a, di)) == 0) continue;
        if (seen >= 0)
          constant = false;
        else
          seen = static_cast<int>(di);
      }
      if (constant) constant_di[a] = seen;
    }
  }

  int best_row = -1;
  std::size_t best_agree = 0;
  auto consider = [&](std::size_t r) {
    std::size_t agree = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (t.cell(r, a) == majority.values[a]) ++agree;
    if (best_row < 0 || agree > best_agree) {
      best_row = static_cast<int>(r);
      best_agree = agree;
    }
  };
  if (scope == ProperScope::CurrentSubtable) {
    sub.members.for_each(consider);
  } else {
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      bool progressing = true;
      for (std::size_t a = 0; a < n && progressing; ++a)
        if (constant_di[a] >= 0 &&
            t.cell_domain_index(r, a) != constant_di[a])
          progressing = false;
      if (progressing) consider(r);
    }
  }
  return Hypothesis{t.row(static_cast<std::size_t>(best_row))};
}

DecisionTree greedy_tree(const DecisionTable& table, int tree_type, GreedyConfig config) {
  check_tree_type(tree_type);
  if (table.row_count() == 0) throw std::invalid_argument("empty table has no decision tree");
  Builder b{table, tree_type, config, {}};
  b.tree.set_root(b.build(table.all_rows()));
  return std::move(b.tree);
}

}  // namespace hyptree
