#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyptree/queries.hpp"
#include "hyptree/table.hpp"

namespace hyptree {

// Rooted decision tree in a compact arena. Internal nodes carry a query and
// one child per answer, in the canonical answer order of query_answers();
// edges therefore store only child ids. Terminals carry a decision label or
// an explicit unreachable marker (the child of an answer no row can give).
// Unreachable terminals are shared: they carry no information.
class DecisionTree {
public:
  enum class NodeKind : std::uint8_t { Leaf, Unreachable, Query };

  struct Node {
    NodeKind kind;
    std::uint32_t payload;     // Leaf: decision pool id; Query: query pool id
    std::uint32_t first_edge;
    std::uint32_t edge_count;
  };

  static constexpr std::uint32_t kNoNode = 0xffffffffu;

  std::uint32_t add_leaf(std::string_view decision);
  std::uint32_t unreachable_node();
  std::uint32_t add_query_node(const Query& q, const std::vector<std::uint32_t>& children);
  void set_root(std::uint32_t id) { root_ = id; }

  std::uint32_t root() const { return root_; }
  bool empty() const { return root_ == kNoNode; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count_total() const { return edges_.size(); }

  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  NodeKind kind(std::uint32_t id) const { return nodes_[id].kind; }
  const Query& query_of(std::uint32_t id) const { return queries_[nodes_[id].payload]; }
  const std::string& decision_of(std::uint32_t id) const { return decisions_[nodes_[id].payload]; }
  std::uint32_t child(std::uint32_t id, std::size_t edge) const {
    return edges_[nodes_[id].first_edge + edge];
  }

  // Structural equality from the roots down.
  bool same_structure(const DecisionTree& other) const;

private:
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> edges_;
  std::vector<Query> queries_;
  std::unordered_map<Query, std::uint32_t, QueryHash> query_ids_;
  std::vector<std::string> decisions_;
  std::unordered_map<std::string, std::uint32_t> decision_ids_;
  std::uint32_t root_ = kNoNode;
  std::uint32_t unreachable_ = kNoNode;
};

// Canonical answer list of a query over the table's original domains:
// attribute queries list ValueIs per domain value ascending; hypothesis
// queries list Confirmed first, then Counterexample(attr, v) by attribute
// then ascending value, skipping the hypothesized value.
std::vector<Answer> query_answers(const DecisionTable& table, const Query& q);
std::size_t query_answer_count(const DecisionTable& table, const Query& q);

// Rows of `rows` consistent with giving `ans` to `q`.
RowSet answer_child_rows(const DecisionTable& table, const RowSet& rows, const Query& q,
                         const Answer& ans);
std::size_t answer_child_count(const DecisionTable& table, const RowSet& rows, const Query& q,
                               const Answer& ans);

// Maximum number of queries on any root-to-terminal path.
int depth(const DecisionTree& tree);

// Number of nodes whose induced subtable is nonempty (root = full table,
// children via the answer semantics). Unreachable markers count zero.
std::int64_t realizable_count(const DecisionTable& table, const DecisionTree& tree);

struct ValidationResult {
  bool ok = true;
  std::string message;
  std::uint32_t node = DecisionTree::kNoNode;

  explicit operator bool() const { return ok; }
};

// Checks that the tree solves the table: structure matches the canonical
// answer sets, no realizable node is an unreachable marker, and every
// realizable terminal is degenerate with the matching decision. Reports the
// first offending node.
ValidationResult validate_solves(const DecisionTable& table, const DecisionTree& tree);

}  // namespace hyptree
