#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyptree/queries.hpp"
#include "hyptree/table.hpp"
#include "hyptree/tree.hpp"

namespace hyptree {

enum class CostModel : std::uint8_t { Depth, RealizableNodes };

inline constexpr std::int64_t kInfiniteCost = std::int64_t{1} << 60;

struct DpOptions {
  HypothesisScope hypothesis_scope = HypothesisScope::OriginalDomains;
  ProperScope proper_scope = ProperScope::CurrentSubtable;
};

// Costs of the single-restriction children of one subtable, indexed by
// (attribute, domain index). kEmptyChild marks unrealizable children;
// kInfiniteCost marks a child equal to the subtable itself, which makes the
// whole query useless (no progress).
struct HypChildCosts {
  static constexpr std::int64_t kEmptyChild = -1;
  std::vector<std::vector<std::int64_t>> at;
};

// Exact optimizer over memoized subtables. Subtables are keyed by member set
// alone: two restriction paths reaching the same rows share one entry.
// Costs for all five tree types and both cost models share the interned
// subtable graph. Not safe for concurrent use; build one engine per worker.
class DpEngine {
public:
  explicit DpEngine(const DecisionTable& table, DpOptions options = {});

  // Minimum depth / minimum realizable-node count over all valid trees of the
  // given type.
  std::int64_t optimal_cost(int tree_type, CostModel cm);

  // A tree achieving optimal_cost, deterministic under the canonical
  // tie-break: attribute queries before hypotheses, then lowest attribute
  // index, then the canonical minimal hypothesis assignment.
  DecisionTree optimal_tree(int tree_type, CostModel cm);

  std::size_t distinct_subtables() const { return sets_.size(); }
  const DecisionTable& table() const { return *table_; }
  const DpOptions& options() const { return options_; }

  // Minimum hypothesis-query cost given the child costs, via per-attribute
  // decomposition for types 2 and 3 and an explicit scan of candidate rows
  // for types 4 and 5. Returns the canonical minimizing assignment.
  static std::pair<std::int64_t, Hypothesis> best_hypothesis(
      const Subtable& sub, int tree_type, CostModel cm, const HypChildCosts& child_costs,
      ProperScope proper_scope = ProperScope::CurrentSubtable,
      HypothesisScope hypothesis_scope = HypothesisScope::OriginalDomains);

private:
  static constexpr std::uint32_t kEmptyChild = 0xffffffffu;
  static constexpr std::uint32_t kSelfChild = 0xfffffffeu;
  static constexpr std::uint32_t kNotExpanded = 0xffffffffu;
  static constexpr std::int64_t kUnsolved = -1;

  std::size_t sweep_index(int k, CostModel cm) const {
    return static_cast<std::size_t>(k - 1) * 2 + (cm == CostModel::RealizableNodes ? 1 : 0);
  }

  std::uint32_t intern(RowSet rows);
  void expand(std::uint32_t id);
  std::int64_t solve(int k, CostModel cm, std::uint32_t id);
  HypChildCosts gather_child_costs(int k, CostModel cm, std::uint32_t id);
  std::int64_t best_attribute_cost(const HypChildCosts& cc, CostModel cm,
                                   std::size_t* best_attr) const;
  Query choose_query(int k, CostModel cm, std::uint32_t id);
  std::uint32_t unfold(int k, CostModel cm, std::uint32_t id, DecisionTree& tree,
                       std::unordered_map<std::uint32_t, Query>& policy);

  const DecisionTable* table_;
  DpOptions options_;
  std::size_t stride_ = 0;
  std::vector<std::size_t> attr_offset_;
  std::unordered_map<RowSet, std::uint32_t, RowSetHash> ids_;
  std::vector<RowSet> sets_;
  std::vector<std::int64_t> sizes_;
  std::vector<std::int32_t> degenerate_;
  std::vector<std::uint32_t> child_base_;
  std::vector<std::uint32_t> children_;
  std::array<std::vector<std::int64_t>, 10> costs_;
  std::uint32_t root_id_ = 0;
};

std::int64_t optimal_cost(const DecisionTable& table, int tree_type, CostModel cm,
                          DpOptions options = {});
DecisionTree optimal_tree(const DecisionTable& table, int tree_type, CostModel cm,
                          DpOptions options = {});

}  // namespace hyptree
