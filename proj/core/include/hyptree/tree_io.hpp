#pragma once

#include <iosfwd>
#include <string>

#include "hyptree/tree.hpp"

namespace hyptree {

// Preorder text format:
//   dtree 1
//   node ask <attr-index> <edge-count>
//   edge val <value>
//   node leaf <decision to end of line>
//   ...
//   node hyp <edge-count>
//   delta <v1> ... <vn>
//   edge yes
//   ...
//   edge no <attr-index> <value>
//   ...
//   node none
// Edges appear in the canonical answer order; the loader checks this against
// the table, so load(save(tree)) reproduces the tree exactly.
void save_tree(std::ostream& out, const DecisionTable& table, const DecisionTree& tree);
void save_tree_file(const std::string& path, const DecisionTable& table, const DecisionTree& tree);

DecisionTree load_tree(std::istream& in, const DecisionTable& table);
DecisionTree load_tree_file(const std::string& path, const DecisionTable& table);

}  // namespace hyptree
