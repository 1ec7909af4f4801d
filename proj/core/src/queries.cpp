#include "hyptree/queries.hpp"

#include <stdexcept>
#include <string>

namespace hyptree {

std::size_t QueryHash::operator()(const Query& q) const {
  std::uint64_t h = q.kind == QueryKind::Attribute ? 0x517cc1b727220a95ULL : 0x2545f4914f6cdd1dULL;
  h ^= q.kind == QueryKind::Attribute ? q.attribute : q.hypothesis.values.size();
  for (Value v : q.hypothesis.values) {
    std::uint64_t y = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    y = (y ^ (y >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h ^= (y ^ (y >> 27)) + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void check_tree_type(int k) {
  if (k < kTreeTypeMin || k > kTreeTypeMax)
    throw std::invalid_argument("tree type must be 1..5, got " + std::to_string(k));
}

bool tree_type_allows_attributes(int k) {
  check_tree_type(k);
  return k == 1 || k == 3 || k == 5;
}

bool tree_type_allows_hypotheses(int k) {
  check_tree_type(k);
  return k >= 2;
}

bool tree_type_requires_proper(int k) {
  check_tree_type(k);
  return k == 4 || k == 5;
}

void check_hypothesis(const DecisionTable& table, const Hypothesis& h) {
  if (h.values.size() != table.attribute_count())
    throw std::invalid_argument("hypothesis must assign a value to every attribute");
  for (std::size_t a = 0; a < h.values.size(); ++a)
    if (table.domain_index(a, h.values[a]) < 0)
      throw std::invalid_argument("hypothesis value for attribute '" + table.attribute_name(a) +
                                  "' is not in its column");
}

std::vector<std::pair<Answer, Subtable>> answers(const Subtable& sub, const Query& q,
                                                 HypothesisScope scope) {
  if (sub.members.empty())
    throw std::invalid_argument("answers are undefined for an empty subtable");
  const DecisionTable& t = *sub.base;
  std::vector<std::pair<Answer, Subtable>> out;

  auto scope_values = [&](std::size_t attr) {
    return scope == HypothesisScope::OriginalDomains ? t.domain(attr) : value_set(sub, attr);
  };

  if (q.kind == QueryKind::Attribute) {
    if (q.attribute >= t.attribute_count())
      throw std::invalid_argument("invalid attribute index " + std::to_string(q.attribute));
    for (Value v : scope_values(q.attribute))
      out.emplace_back(Answer::value_is(q.attribute, v), restrict_by(sub, q.attribute, v));
    return out;
  }

  check_hypothesis(t, q.hypothesis);
  RowSet confirmed(t.row_count());
  int r = t.find_row(q.hypothesis.values);
  if (r >= 0 && sub.members.test(static_cast<std::size_t>(r)))
    confirmed.set(static_cast<std::size_t>(r));
  out.emplace_back(Answer::confirmed(), Subtable{sub.base, std::move(confirmed)});

  for (std::size_t a = 0; a < t.attribute_count(); ++a)
    for (Value v : scope_values(a))
      if (v != q.hypothesis.values[a])
        out.emplace_back(Answer::counterexample(a, v), restrict_by(sub, a, v));
  return out;
}

bool is_proper(const Subtable& sub, const Hypothesis& h, ProperScope scope) {
  const DecisionTable& t = *sub.base;
  if (h.values.size() != t.attribute_count())
    throw std::invalid_argument("hypothesis must assign a value to every attribute");
  int r = t.find_row(h.values);
  if (r < 0) return false;
  return scope == ProperScope::OriginalTable || sub.members.test(static_cast<std::size_t>(r));
}

bool allowed(int k, const Query& q, const Subtable& sub, ProperScope scope) {
  check_tree_type(k);
  if (q.kind == QueryKind::Attribute) return tree_type_allows_attributes(k);
  if (!tree_type_allows_hypotheses(k)) return false;
  if (!tree_type_requires_proper(k)) return true;
  return is_proper(sub, q.hypothesis, scope);
}

}  // namespace hyptree
