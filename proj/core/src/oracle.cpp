#include "hyptree/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hyptree/queries.hpp"

namespace hyptree {

namespace {

struct BruteForce {
  const DecisionTable& table;
  int k;
  CostModel cm;
  DpOptions options;
  std::unordered_map<RowSet, std::int64_t, RowSetHash> memo;

  std::vector<Query> all_queries(const Subtable& sub) const {
    std::vector<Query> out;
    for (std::size_t a = 0; a < table.attribute_count(); ++a)
      out.push_back(Query::ask_attribute(a));

    // every hypothesis assignment over the scope domains
    std::vector<std::vector<Value>> choices(table.attribute_count());
    for (std::size_t a = 0; a < table.attribute_count(); ++a)
      choices[a] = options.hypothesis_scope == HypothesisScope::OriginalDomains
                       ? table.domain(a)
                       : value_set(sub, a);
    std::vector<Value> tuple(table.attribute_count());
    std::vector<std::size_t> pos(table.attribute_count(), 0);
    for (;;) {
      for (std::size_t a = 0; a < tuple.size(); ++a) tuple[a] = choices[a][pos[a]];
      out.push_back(Query::ask_hypothesis(Hypothesis{tuple}));
      std::size_t a = tuple.size();
      while (a > 0) {
        --a;
        if (++pos[a] < choices[a].size()) break;
        pos[a] = 0;
        if (a == 0) return out;
      }
      if (tuple.empty()) return out;
    }
  }

  std::int64_t cost(const Subtable& sub) {
    if (auto it = memo.find(sub.members); it != memo.end()) return it->second;
    if (is_degenerate(sub)) {
      std::int64_t base = cm == CostModel::Depth ? 0 : 1;
      memo.emplace(sub.members, base);
      return base;
    }
    std::int64_t best = kInfiniteCost;
    for (const Query& q : all_queries(sub)) {
      if (!allowed(k, q, sub, options.proper_scope)) continue;
      std::int64_t c = cm == CostModel::Depth ? 0 : 0;
      bool useless = false;
      for (auto& [ans, child] : answers(sub, q, options.hypothesis_scope)) {
        if (child.members.empty()) continue;
        if (child.members == sub.members) {  // no progress
          useless = true;
          break;
        }
        std::int64_t cc = cost(child);
        c = cm == CostModel::Depth ? std::max(c, cc) : c + cc;
      }
      if (useless) continue;
      best = std::min(best, 1 + c);
    }
    memo.emplace(sub.members, best);
    return best;
  }
};

}  // namespace

std::int64_t brute_force_optimal(const DecisionTable& table, int tree_type, CostModel cm,
                                 const OracleLimits& limits, DpOptions options) {
  check_tree_type(tree_type);
  if (table.row_count() == 0) throw std::invalid_argument("empty table has no decision tree");
  if (table.row_count() > limits.max_rows)
    throw std::invalid_argument("oracle limit exceeded: rows");
  if (table.attribute_count() > limits.max_attributes)
    throw std::invalid_argument("oracle limit exceeded: attributes");
  for (std::size_t a = 0; a < table.attribute_count(); ++a)
    if (table.domain(a).size() > limits.max_domain)
      throw std::invalid_argument("oracle limit exceeded: domain size");

  BruteForce bf{table, tree_type, cm, options, {}};
  return bf.cost(full_subtable(table));
}

DecisionTable random_table(std::mt19937& rng, std::size_t rows, std::size_t attrs,
                           std::size_t domain_size) {
  if (attrs == 0 || domain_size == 0) throw std::invalid_argument("random_table: degenerate shape");
  std::uint64_t capacity = 1;
  for (std::size_t a = 0; a < attrs; ++a) {
    capacity *= domain_size;
    if (capacity > 4096) break;  // plenty; avoids overflow for wide shapes
  }
  rows = std::min<std::uint64_t>(rows, capacity);

  std::uniform_int_distribution<Value> pick(0, static_cast<Value>(domain_size - 1));
  std::unordered_set<std::string> seen;
  std::vector<std::vector<Value>> out_rows;
  while (out_rows.size() < rows) {
    std::vector<Value> row(attrs);
    std::string key;
    for (auto& v : row) {
      v = pick(rng);
      key += static_cast<char>('0' + v);
    }
    if (seen.insert(key).second) out_rows.push_back(std::move(row));
  }

  std::vector<std::string> names;
  for (std::size_t a = 0; a < attrs; ++a) names.push_back("f" + std::to_string(a + 1));
  std::vector<std::string> decisions;
  for (std::size_t r = 0; r < out_rows.size(); ++r) decisions.push_back("d" + std::to_string(r));
  return DecisionTable(std::move(names), std::move(out_rows), std::move(decisions));
}

}  // namespace hyptree
