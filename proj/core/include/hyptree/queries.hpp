#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyptree/table.hpp"

namespace hyptree {

// A full assignment of one value per attribute. Asking it either confirms the
// hidden row equals the assignment or yields a counterexample f_i = sigma with
// sigma different from the proposed value.
struct Hypothesis {
  std::vector<Value> values;

  bool operator==(const Hypothesis&) const = default;
};

enum class QueryKind : std::uint8_t { Attribute, Hypothesis };

struct Query {
  QueryKind kind = QueryKind::Attribute;
  std::size_t attribute = 0;
  Hypothesis hypothesis;

  static Query ask_attribute(std::size_t attr) {
    Query q;
    q.kind = QueryKind::Attribute;
    q.attribute = attr;
    return q;
  }

  static Query ask_hypothesis(Hypothesis h) {
    Query q;
    q.kind = QueryKind::Hypothesis;
    q.hypothesis = std::move(h);
    return q;
  }

  bool operator==(const Query&) const = default;
};

struct QueryHash {
  std::size_t operator()(const Query& q) const;
};

enum class AnswerKind : std::uint8_t { ValueIs, Confirmed, Counterexample };

struct Answer {
  AnswerKind kind = AnswerKind::Confirmed;
  std::size_t attribute = 0;  // ValueIs / Counterexample
  Value value = 0;            // ValueIs / Counterexample

  static Answer value_is(std::size_t attr, Value v) { return {AnswerKind::ValueIs, attr, v}; }
  static Answer confirmed() { return {AnswerKind::Confirmed, 0, 0}; }
  static Answer counterexample(std::size_t attr, Value v) {
    return {AnswerKind::Counterexample, attr, v};
  }

  bool operator==(const Answer&) const = default;
};

// Where hypothesis values and counterexample values range: the original
// table's domains (default) or only the values still present in the subtable.
enum class HypothesisScope : std::uint8_t { OriginalDomains, SubtableDomains };

// What a "proper" hypothesis must match: a member row of the current subtable
// (default) or any row of the original table.
enum class ProperScope : std::uint8_t { CurrentSubtable, OriginalTable };

// Tree types 1..5: which queries internal nodes may use.
//   1 attributes, 2 hypotheses, 3 both, 4 proper hypotheses,
//   5 attributes + proper hypotheses.
inline constexpr int kTreeTypeMin = 1;
inline constexpr int kTreeTypeMax = 5;

void check_tree_type(int k);
bool tree_type_allows_attributes(int k);  // k in {1,3,5}
bool tree_type_allows_hypotheses(int k);  // k in {2,3,4,5}
bool tree_type_requires_proper(int k);    // k in {4,5}

// All answers to `q` on `sub`, each paired with the induced child subtable.
// Attribute query: one ValueIs per scope-domain value, children may be empty.
// Hypothesis query: Confirmed (child holds the member row equal to the
// assignment, if any) followed by every Counterexample(attr, sigma) with sigma
// != delta_attr in the scope-domain. An answer is realizable iff its child is
// nonempty.
std::vector<std::pair<Answer, Subtable>> answers(
    const Subtable& sub, const Query& q,
    HypothesisScope scope = HypothesisScope::OriginalDomains);

bool is_proper(const Subtable& sub, const Hypothesis& h,
               ProperScope scope = ProperScope::CurrentSubtable);

// Whether a tree of type `k` may use `q` at a node holding `sub`.
bool allowed(int k, const Query& q, const Subtable& sub,
             ProperScope scope = ProperScope::CurrentSubtable);

// Throws unless the hypothesis has one value per attribute, each drawn from
// that attribute's original domain.
void check_hypothesis(const DecisionTable& table, const Hypothesis& h);

}  // namespace hyptree
