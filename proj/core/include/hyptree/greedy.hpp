#pragma once

#include <cstdint>

#include "hyptree/queries.hpp"
#include "hyptree/table.hpp"
#include "hyptree/tree.hpp"

namespace hyptree {

enum class ImpurityRule : std::uint8_t { WorstChildThenWeightedSum };
enum class TieBreakRule : std::uint8_t { Canonical };
enum class HypothesisRule : std::uint8_t { MajorityVector };

struct GreedyConfig {
  ImpurityRule impurity = ImpurityRule::WorstChildThenWeightedSum;
  TieBreakRule tie_break = TieBreakRule::Canonical;
  HypothesisRule hypothesis_rule = HypothesisRule::MajorityVector;
  ProperScope proper_scope = ProperScope::CurrentSubtable;
};

// Shannon entropy of the decision distribution over the member rows;
// zero exactly on degenerate subtables.
double entropy(const Subtable& sub);

// The single hypothesis the greedy builder considers at a node. Types 2 and
// 3 take the per-column majority value (ties to the smaller value); types 4
// and 5 take the candidate row agreeing with that majority vector on the
// most attributes (ties to the lowest row index).
Hypothesis candidate_hypothesis(const Subtable& sub, int tree_type,
                                ProperScope scope = ProperScope::CurrentSubtable);

// Top-down construction: at every nondegenerate node the candidates are the
// non-constant attribute queries (when the type permits them) and the
// candidate hypothesis (when it permits hypotheses). A candidate is scored by
// the entropy of its worst realizable child and then by the size-weighted
// child entropy; the smallest wins. Remaining ties go to fewer realizable
// answers, then attributes before hypotheses, then the lowest attribute
// index.
DecisionTree greedy_tree(const DecisionTable& table, int tree_type, GreedyConfig config = {});

}  // namespace hyptree
