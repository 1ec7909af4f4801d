#include "hyptree/dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyptree {

DpEngine::DpEngine(const DecisionTable& table, DpOptions options)
    : table_(&table), options_(options) {
  attr_offset_.resize(table.attribute_count());
  for (std::size_t a = 0; a < table.attribute_count(); ++a) {
    attr_offset_[a] = stride_;
    stride_ += table.domain(a).size();
  }
  if (table.row_count() > 0) root_id_ = intern(table.all_rows());
}

std::uint32_t DpEngine::intern(RowSet rows) {
  auto it = ids_.find(rows);
  if (it != ids_.end()) return it->second;

  std::uint32_t id = static_cast<std::uint32_t>(sets_.size());
  int dec = -1;
  bool mixed = false;
  rows.for_each([&](std::size_t r) {
    int d = table_->decision_id(r);
    if (dec < 0)
      dec = d;
    else if (d != dec)
      mixed = true;
  });
  sizes_.push_back(static_cast<std::int64_t>(rows.count()));
  degenerate_.push_back(mixed ? -1 : dec);
  child_base_.push_back(kNotExpanded);
  ids_.emplace(rows, id);
  sets_.push_back(std::move(rows));
  return id;
}

void DpEngine::expand(std::uint32_t id) {
  if (child_base_[id] != kNotExpanded) return;
  const RowSet parent = sets_[id];  // sets_ may grow while interning children
  const std::int64_t psize = sizes_[id];
  const std::uint32_t base = static_cast<std::uint32_t>(children_.size());
  children_.resize(children_.size() + stride_, kEmptyChild);
  child_base_[id] = base;

  RowSet child;
  for (std::size_t a = 0; a < table_->attribute_count(); ++a) {
    for (std::size_t di = 0; di < table_->domain(a).size(); ++di) {
      RowSet::and_into(parent, table_->value_mask(a, di), child);
      const std::int64_t cnt = static_cast<std::int64_t>(child.count());
      std::uint32_t tag;
      if (cnt == 0)
        tag = kEmptyChild;
      else if (cnt == psize)
        tag = kSelfChild;
      else
        tag = intern(child);
      children_[base + attr_offset_[a] + di] = tag;
    }
  }
}

HypChildCosts DpEngine::gather_child_costs(int k, CostModel cm, std::uint32_t id) {
  expand(id);
  HypChildCosts cc;
  cc.at.resize(table_->attribute_count());
  const std::uint32_t base = child_base_[id];
  for (std::size_t a = 0; a < table_->attribute_count(); ++a) {
    cc.at[a].resize(table_->domain(a).size());
    for (std::size_t di = 0; di < table_->domain(a).size(); ++di) {
      std::uint32_t c = children_[base + attr_offset_[a] + di];
      cc.at[a][di] = c == kEmptyChild ? HypChildCosts::kEmptyChild
                     : c == kSelfChild ? kInfiniteCost
                                       : solve(k, cm, c);
    }
  }
  return cc;
}

std::int64_t DpEngine::best_attribute_cost(const HypChildCosts& cc, CostModel cm,
                                           std::size_t* best_attr) const {
  std::int64_t best = kInfiniteCost;
  for (std::size_t a = 0; a < cc.at.size(); ++a) {
    std::int64_t agg = 0;
    bool viable = true;
    for (std::int64_t c : cc.at[a]) {
      if (c == HypChildCosts::kEmptyChild) continue;
      if (c >= kInfiniteCost) {  // a child equal to the subtable: no progress
        viable = false;
        break;
      }
      agg = cm == CostModel::Depth ? std::max(agg, c) : agg + c;
    }
    if (!viable) continue;
    if (1 + agg < best) {
      best = 1 + agg;
      if (best_attr) *best_attr = a;
    }
  }
  return best;
}

namespace {

// Aggregated cost of the nonempty children other than `skip_di` in one
// column: max for depth, sum for nodes, infinite if any of them is the
// subtable itself.
std::int64_t other_values_cost(const std::vector<std::int64_t>& column, std::size_t skip_di,
                               CostModel cm) {
  std::int64_t agg = 0;
  for (std::size_t di = 0; di < column.size(); ++di) {
    if (di == skip_di) continue;
    std::int64_t c = column[di];
    if (c == HypChildCosts::kEmptyChild) continue;
    if (c >= kInfiniteCost) return kInfiniteCost;
    agg = cm == CostModel::Depth ? std::max(agg, c) : agg + c;
  }
  return agg;
}

}  // namespace

std::pair<std::int64_t, Hypothesis> DpEngine::best_hypothesis(const Subtable& sub, int k,
                                                              CostModel cm,
                                                              const HypChildCosts& cc,
                                                              ProperScope proper_scope,
                                                              HypothesisScope hypothesis_scope) {
  if (!tree_type_allows_hypotheses(k))
    throw std::invalid_argument("tree type " + std::to_string(k) + " admits no hypothesis query");
  const DecisionTable& t = *sub.base;
  const std::size_t n = t.attribute_count();
  if (cc.at.size() != n)
    throw std::invalid_argument("child costs must cover every attribute");

  if (k == 2 || k == 3) {
    // A hypothesis value may be any original-domain value; under the
    // subtable-local scope only values still present in the subtable
    // (nonempty or self child) qualify.
    auto is_candidate = [&](std::size_t a, std::size_t di) {
      return hypothesis_scope == HypothesisScope::OriginalDomains ||
             cc.at[a][di] != HypChildCosts::kEmptyChild;
    };

    if (cm == CostModel::Depth) {
      // min over assignments of max_a D_a(v_a) decomposes per attribute.
      std::vector<std::vector<std::int64_t>> d_cost(n);
      std::int64_t total = 0;
      for (std::size_t a = 0; a < n; ++a) {
        d_cost[a].assign(cc.at[a].size(), kInfiniteCost);
        std::int64_t attr_best = kInfiniteCost;
        for (std::size_t di = 0; di < cc.at[a].size(); ++di) {
          if (!is_candidate(a, di)) continue;
          d_cost[a][di] = other_values_cost(cc.at[a], di, cm);
          attr_best = std::min(attr_best, d_cost[a][di]);
        }
        total = std::max(total, attr_best);
      }
      Hypothesis h;
      h.values.resize(n);
      if (total >= kInfiniteCost) return {kInfiniteCost, h};
      // lexicographically smallest assignment among the minimizers
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t di = 0; di < cc.at[a].size(); ++di)
          if (d_cost[a][di] <= total) {
            h.values[a] = t.domain(a)[di];
            break;
          }
      return {1 + total, h};
    }

    // Node count: 1 + sum_a S_a(v_a), plus 1 when the confirmed branch is
    // realizable, i.e. when the assignment is a member row. Any non-minimal
    // sum costs at least one more, so the optimum is S_min when some
    // sum-minimizing assignment is not a member row and S_min + 1 otherwise.
    std::vector<std::vector<std::size_t>> argmin(n);
    std::int64_t s_min = 0;
    for (std::size_t a = 0; a < n; ++a) {
      std::int64_t attr_best = kInfiniteCost;
      std::vector<std::int64_t> s(cc.at[a].size(), kInfiniteCost);
      for (std::size_t di = 0; di < cc.at[a].size(); ++di) {
        if (!is_candidate(a, di)) continue;
        s[di] = other_values_cost(cc.at[a], di, cm);
        attr_best = std::min(attr_best, s[di]);
      }
      if (attr_best >= kInfiniteCost) return {kInfiniteCost, Hypothesis{std::vector<Value>(n)}};
      s_min += attr_best;
      for (std::size_t di = 0; di < cc.at[a].size(); ++di)
        if (s[di] == attr_best) argmin[a].push_back(di);
    }

    // Count member rows inside the product of per-attribute argmin sets and
    // compare with the product size (saturating: once larger than the member
    // count some minimizer is certainly not a member row).
    RowSet inside = sub.members;
    RowSet mask_union(t.row_count());
    for (std::size_t a = 0; a < n; ++a) {
      mask_union = RowSet(t.row_count());
      for (std::size_t di : argmin[a]) mask_union |= t.value_mask(a, di);
      inside &= mask_union;
    }
    const std::uint64_t members_inside = inside.count();
    std::uint64_t product = 1;
    for (std::size_t a = 0; a < n; ++a) {
      product *= argmin[a].size();
      if (product > members_inside + 1) {
        product = members_inside + 1;  // saturate; only equality with members_inside matters
      }
    }
    const bool all_minimizers_are_members = product == members_inside;
    Hypothesis h;
    h.values.resize(n);
    if (all_minimizers_are_members) {
      // Every product assignment is a member row; the lexicographically first
      // one is the canonical choice.
      for (std::size_t a = 0; a < n; ++a) h.values[a] = t.domain(a)[argmin[a][0]];
      return {1 + s_min + 1, h};
    }
    // Walk the product in lexicographic order until an assignment that is not
    // a member row appears; at most members_inside + 1 steps.
    std::vector<std::size_t> pos(n, 0);
    for (std::uint64_t step = 0;; ++step) {
      if (step > members_inside + 1)
        throw std::logic_error("no non-member minimizer found despite product > member count");
      for (std::size_t a = 0; a < n; ++a) h.values[a] = t.domain(a)[argmin[a][pos[a]]];
      int r = t.find_row(h.values);
      if (r < 0 || !sub.members.test(static_cast<std::size_t>(r))) break;
      std::size_t a = n;
      while (a > 0) {
        --a;
        if (++pos[a] < argmin[a].size()) break;
        pos[a] = 0;
      }
    }
    return {1 + s_min, h};
  }

  // Types 4 and 5: candidates are rows (of the subtable or the whole table).
  std::vector<std::vector<std::int64_t>> agg(n);
  for (std::size_t a = 0; a < n; ++a) {
    agg[a].resize(cc.at[a].size());
    for (std::size_t di = 0; di < cc.at[a].size(); ++di)
      agg[a][di] = other_values_cost(cc.at[a], di, cm);
  }

  std::int64_t best = kInfiniteCost;
  int best_row = -1;
  auto consider = [&](std::size_t r) {
    std::int64_t c = 0;
    for (std::size_t a = 0; a < n; ++a) {
      std::int64_t x = agg[a][static_cast<std::size_t>(t.cell_domain_index(r, a))];
      if (x >= kInfiniteCost) {
        c = kInfiniteCost;
        break;
      }
      c = cm == CostModel::Depth ? std::max(c, x) : c + x;
    }
    if (c >= kInfiniteCost) return;
    std::int64_t cost = 1 + c;
    if (cm == CostModel::RealizableNodes && sub.members.test(r)) ++cost;  // confirmed branch
    if (cost < best ||
        (cost == best && best_row >= 0 && t.row(r) < t.row(static_cast<std::size_t>(best_row)))) {
      best = cost;
      best_row = static_cast<int>(r);
    }
  };
  if (proper_scope == ProperScope::CurrentSubtable) {
    sub.members.for_each(consider);
  } else {
    for (std::size_t r = 0; r < t.row_count(); ++r) consider(r);
  }
  if (best_row < 0) return {kInfiniteCost, Hypothesis{std::vector<Value>(n)}};
  return {best, Hypothesis{t.row(static_cast<std::size_t>(best_row))}};
}

std::int64_t DpEngine::solve(int k, CostModel cm, std::uint32_t id) {
  const std::size_t sw = sweep_index(k, cm);
  if (costs_[sw].size() < sets_.size()) costs_[sw].resize(sets_.size(), kUnsolved);
  if (costs_[sw][id] != kUnsolved) return costs_[sw][id];
  if (degenerate_[id] >= 0)
    return costs_[sw][id] = cm == CostModel::Depth ? 0 : 1;

  HypChildCosts cc = gather_child_costs(k, cm, id);

  std::int64_t best = kInfiniteCost;
  if (tree_type_allows_attributes(k)) {
    std::size_t ignored = 0;
    best = best_attribute_cost(cc, cm, &ignored);
  }
  if (tree_type_allows_hypotheses(k)) {
    auto [hc, h] = best_hypothesis(Subtable{table_, sets_[id]}, k, cm, cc,
                                   options_.proper_scope, options_.hypothesis_scope);
    best = std::min(best, hc);
  }
  if (best >= kInfiniteCost)
    throw std::logic_error("no progressing query exists; the table is inconsistent");

  if (costs_[sw].size() < sets_.size()) costs_[sw].resize(sets_.size(), kUnsolved);
  return costs_[sw][id] = best;
}

Query DpEngine::choose_query(int k, CostModel cm, std::uint32_t id) {
  const std::int64_t target = solve(k, cm, id);
  HypChildCosts cc = gather_child_costs(k, cm, id);
  if (tree_type_allows_attributes(k)) {
    std::size_t best_attr = 0;
    if (best_attribute_cost(cc, cm, &best_attr) == target) return Query::ask_attribute(best_attr);
  }
  auto [hc, h] = best_hypothesis(Subtable{table_, sets_[id]}, k, cm, cc, options_.proper_scope,
                                 options_.hypothesis_scope);
  if (hc != target)
    throw std::logic_error("tree extraction does not reproduce the optimal cost");
  return Query::ask_hypothesis(std::move(h));
}

std::uint32_t DpEngine::unfold(int k, CostModel cm, std::uint32_t id, DecisionTree& tree,
                               std::unordered_map<std::uint32_t, Query>& policy) {
  if (degenerate_[id] >= 0) return tree.add_leaf(table_->decision_name(degenerate_[id]));

  auto it = policy.find(id);
  if (it == policy.end()) it = policy.emplace(id, choose_query(k, cm, id)).first;
  const Query& q = it->second;

  const std::uint32_t base = child_base_[id];
  auto unfold_child = [&](std::uint32_t c) {
    if (c == kEmptyChild) return tree.unreachable_node();
    if (c == kSelfChild)
      throw std::logic_error("chosen query has a child equal to its subtable");
    return unfold(k, cm, c, tree, policy);
  };
  std::vector<std::uint32_t> children;
  if (q.kind == QueryKind::Attribute) {
    const std::size_t a = q.attribute;
    children.reserve(table_->domain(a).size());
    for (std::size_t di = 0; di < table_->domain(a).size(); ++di)
      children.push_back(unfold_child(children_[base + attr_offset_[a] + di]));
  } else {
    int r = table_->find_row(q.hypothesis.values);
    bool member = r >= 0 && sets_[id].test(static_cast<std::size_t>(r));
    children.push_back(member ? tree.add_leaf(table_->decision(static_cast<std::size_t>(r)))
                              : tree.unreachable_node());
    for (std::size_t a = 0; a < table_->attribute_count(); ++a) {
      for (std::size_t di = 0; di < table_->domain(a).size(); ++di) {
        if (table_->domain(a)[di] == q.hypothesis.values[a]) continue;
        children.push_back(unfold_child(children_[base + attr_offset_[a] + di]));
      }
    }
  }
  return tree.add_query_node(q, children);
}

std::int64_t DpEngine::optimal_cost(int k, CostModel cm) {
  check_tree_type(k);
  if (table_->row_count() == 0) throw std::invalid_argument("empty table has no decision tree");
  return solve(k, cm, root_id_);
}

DecisionTree DpEngine::optimal_tree(int k, CostModel cm) {
  optimal_cost(k, cm);
  DecisionTree tree;
  std::unordered_map<std::uint32_t, Query> policy;
  tree.set_root(unfold(k, cm, root_id_, tree, policy));
  return tree;
}

std::int64_t optimal_cost(const DecisionTable& table, int tree_type, CostModel cm,
                          DpOptions options) {
  DpEngine engine(table, options);
  return engine.optimal_cost(tree_type, cm);
}

DecisionTree optimal_tree(const DecisionTable& table, int tree_type, CostModel cm,
                          DpOptions options) {
  DpEngine engine(table, options);
  return engine.optimal_tree(tree_type, cm);
}

}  // namespace hyptree
