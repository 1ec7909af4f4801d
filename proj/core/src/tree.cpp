#include "hyptree/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyptree {

std::uint32_t DecisionTree::add_leaf(std::string_view decision) {
  auto it = decision_ids_.find(std::string(decision));
  std::uint32_t pool;
  if (it != decision_ids_.end()) {
    pool = it->second;
  } else {
    pool = static_cast<std::uint32_t>(decisions_.size());
    decisions_.emplace_back(decision);
    decision_ids_.emplace(decisions_.back(), pool);
  }
  nodes_.push_back(Node{NodeKind::Leaf, pool, 0, 0});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t DecisionTree::unreachable_node() {
  if (unreachable_ == kNoNode) {
    nodes_.push_back(Node{NodeKind::Unreachable, 0, 0, 0});
    unreachable_ = static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  return unreachable_;
}

std::uint32_t DecisionTree::add_query_node(const Query& q,
                                           const std::vector<std::uint32_t>& children) {
  auto it = query_ids_.find(q);
  std::uint32_t pool;
  if (it != query_ids_.end()) {
    pool = it->second;
  } else {
    pool = static_cast<std::uint32_t>(queries_.size());
    queries_.push_back(q);
    query_ids_.emplace(q, pool);
  }
  std::uint32_t first = static_cast<std::uint32_t>(edges_.size());
  edges_.insert(edges_.end(), children.begin(), children.end());
  nodes_.push_back(Node{NodeKind::Query, pool, first, static_cast<std::uint32_t>(children.size())});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

bool DecisionTree::same_structure(const DecisionTree& other) const {
  if ((root_ == kNoNode) != (other.root_ == kNoNode)) return false;
  if (root_ == kNoNode) return true;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{root_, other.root_}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Node& na = nodes_[a];
    const Node& nb = other.nodes_[b];
    if (na.kind != nb.kind) return false;
    switch (na.kind) {
      case NodeKind::Unreachable:
        break;
      case NodeKind::Leaf:
        if (decisions_[na.payload] != other.decisions_[nb.payload]) return false;
        break;
      case NodeKind::Query:
        if (!(queries_[na.payload] == other.queries_[nb.payload])) return false;
        if (na.edge_count != nb.edge_count) return false;
        for (std::uint32_t e = 0; e < na.edge_count; ++e)
          stack.emplace_back(edges_[na.first_edge + e], other.edges_[nb.first_edge + e]);
        break;
    }
  }
  return true;
}

std::vector<Answer> query_answers(const DecisionTable& table, const Query& q) {
  std::vector<Answer> out;
  if (q.kind == QueryKind::Attribute) {
    for (Value v : table.domain(q.attribute)) out.push_back(Answer::value_is(q.attribute, v));
    return out;
  }
  out.push_back(Answer::confirmed());
  for (std::size_t a = 0; a < table.attribute_count(); ++a) {
    Value delta = a < q.hypothesis.values.size() ? q.hypothesis.values[a] : -1;
    for (Value v : table.domain(a))
      if (v != delta) out.push_back(Answer::counterexample(a, v));
  }
  return out;
}

std::size_t query_answer_count(const DecisionTable& table, const Query& q) {
  if (q.kind == QueryKind::Attribute) return table.domain(q.attribute).size();
  std::size_t c = 1;
  for (std::size_t a = 0; a < table.attribute_count(); ++a) {
    Value delta = a < q.hypothesis.values.size() ? q.hypothesis.values[a] : -1;
    c += table.domain(a).size();
    if (table.domain_index(a, delta) >= 0) --c;
  }
  return c;
}

RowSet answer_child_rows(const DecisionTable& table, const RowSet& rows, const Query& q,
                         const Answer& ans) {
  if (ans.kind == AnswerKind::Confirmed) {
    RowSet child(table.row_count());
    int r = table.find_row(q.hypothesis.values);
    if (r >= 0 && rows.test(static_cast<std::size_t>(r))) child.set(static_cast<std::size_t>(r));
    return child;
  }
  int di = table.domain_index(ans.attribute, ans.value);
  if (di < 0) return RowSet(table.row_count());
  return rows & table.value_mask(ans.attribute, static_cast<std::size_t>(di));
}

std::size_t answer_child_count(const DecisionTable& table, const RowSet& rows, const Query& q,
                               const Answer& ans) {
  if (ans.kind == AnswerKind::Confirmed) {
    int r = table.find_row(q.hypothesis.values);
    return r >= 0 && rows.test(static_cast<std::size_t>(r)) ? 1 : 0;
  }
  int di = table.domain_index(ans.attribute, ans.value);
  if (di < 0) return 0;
  return RowSet::and_count(rows, table.value_mask(ans.attribute, static_cast<std::size_t>(di)));
}

int depth(const DecisionTree& tree) {
  if (tree.empty() || tree.kind(tree.root()) != DecisionTree::NodeKind::Query) return 0;
  // Iterative post-order over query nodes; terminals contribute depth 0.
  struct Frame {
    std::uint32_t id;
    std::uint32_t next_edge;
    int best_child;
  };
  std::vector<Frame> stack{{tree.root(), 0, 0}};
  int result = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_edge == tree.node(f.id).edge_count) {
      int d = 1 + f.best_child;
      stack.pop_back();
      if (stack.empty())
        result = d;
      else
        stack.back().best_child = std::max(stack.back().best_child, d);
      continue;
    }
    std::uint32_t child = tree.child(f.id, f.next_edge++);
    if (tree.kind(child) == DecisionTree::NodeKind::Query) stack.push_back(Frame{child, 0, 0});
  }
  return result;
}

namespace {

struct PropagateFrame {
  std::uint32_t id;
  RowSet rows;
};

}  // namespace

std::int64_t realizable_count(const DecisionTable& table, const DecisionTree& tree) {
  if (tree.empty() || table.row_count() == 0) return 0;
  std::int64_t count = 0;
  std::vector<PropagateFrame> stack;
  stack.push_back({tree.root(), table.all_rows()});
  while (!stack.empty()) {
    PropagateFrame f = std::move(stack.back());
    stack.pop_back();
    ++count;  // every frame on the stack is realizable
    if (tree.kind(f.id) != DecisionTree::NodeKind::Query) continue;
    const Query& q = tree.query_of(f.id);
    if (tree.node(f.id).edge_count != query_answer_count(table, q))
      throw std::invalid_argument("tree node " + std::to_string(f.id) +
                                  " does not structurally match the table");
    std::size_t e = 0;
    for (const Answer& ans : query_answers(table, q)) {
      std::uint32_t child = tree.child(f.id, e++);
      if (answer_child_count(table, f.rows, q, ans) == 0) continue;
      stack.push_back({child, answer_child_rows(table, f.rows, q, ans)});
    }
  }
  return count;
}

ValidationResult validate_solves(const DecisionTable& table, const DecisionTree& tree) {
  auto fail = [](std::uint32_t id, std::string msg) {
    return ValidationResult{false, std::move(msg), id};
  };
  if (tree.empty()) return fail(DecisionTree::kNoNode, "tree has no root");

  // Structural pass over every node, including unrealizable ones.
  for (std::uint32_t id = 0; id < tree.node_count(); ++id) {
    if (tree.kind(id) != DecisionTree::NodeKind::Query) continue;
    const Query& q = tree.query_of(id);
    if (q.kind == QueryKind::Attribute) {
      if (q.attribute >= table.attribute_count())
        return fail(id, "node asks an attribute the table does not have");
    } else {
      if (q.hypothesis.values.size() != table.attribute_count())
        return fail(id, "node hypothesis does not assign every attribute");
      for (std::size_t a = 0; a < table.attribute_count(); ++a)
        if (table.domain_index(a, q.hypothesis.values[a]) < 0)
          return fail(id, "node hypothesis uses a value outside the column of '" +
                              table.attribute_name(a) + "'");
    }
    if (tree.node(id).edge_count != query_answer_count(table, q))
      return fail(id, "node edge set does not match the answer set of its query");
  }

  if (table.row_count() == 0) return {};

  // Semantic pass over realizable nodes.
  std::vector<PropagateFrame> stack;
  stack.push_back({tree.root(), table.all_rows()});
  while (!stack.empty()) {
    PropagateFrame f = std::move(stack.back());
    stack.pop_back();
    switch (tree.kind(f.id)) {
      case DecisionTree::NodeKind::Unreachable:
        return fail(f.id, "a row can reach an unreachable marker");
      case DecisionTree::NodeKind::Leaf: {
        Subtable sub{&table, f.rows};
        int dec = degenerate_decision(sub);
        if (dec < 0)
          return fail(f.id, "terminal reached by rows with different decisions");
        if (table.decision_name(dec) != tree.decision_of(f.id))
          return fail(f.id, "terminal labeled '" + tree.decision_of(f.id) +
                                "' but reached only by rows deciding '" +
                                table.decision_name(dec) + "'");
        break;
      }
      case DecisionTree::NodeKind::Query: {
        const Query& q = tree.query_of(f.id);
        std::size_t e = 0;
        for (const Answer& ans : query_answers(table, q)) {
          std::uint32_t child = tree.child(f.id, e++);
          if (answer_child_count(table, f.rows, q, ans) == 0) continue;
          stack.push_back({child, answer_child_rows(table, f.rows, q, ans)});
        }
        break;
      }
    }
  }
  return {};
}

}  // namespace hyptree
