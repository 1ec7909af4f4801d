#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyptree/rowset.hpp"

namespace hyptree {

using Value = std::int32_t;

// Consistent decision table: pairwise-distinct rows over non-negative integer
// attribute values, each row labeled with its own decision. Immutable after
// construction; per-column value masks and a row lookup are precomputed so
// restriction is a bit-set intersection.
class DecisionTable {
public:
  DecisionTable(std::vector<std::string> attribute_names,
                std::vector<std::vector<Value>> rows,
                std::vector<std::string> decisions);

  std::size_t attribute_count() const { return attribute_names_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  const std::string& attribute_name(std::size_t attr) const;
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }
  int attribute_index(std::string_view name) const;  // -1 if unknown

  // Distinct values of the column, ascending.
  const std::vector<Value>& domain(std::size_t attr) const;
  int domain_index(std::size_t attr, Value v) const;  // -1 if absent
  int cell_domain_index(std::size_t row, std::size_t attr) const;

  Value cell(std::size_t row, std::size_t attr) const;
  const std::vector<Value>& row(std::size_t r) const;
  const std::string& decision(std::size_t r) const;
  int decision_id(std::size_t r) const { return decision_ids_[r]; }
  std::size_t decision_count() const { return decision_names_.size(); }
  const std::string& decision_name(int id) const { return decision_names_[id]; }

  // Row with exactly these values, or -1.
  int find_row(const std::vector<Value>& values) const;

  const RowSet& value_mask(std::size_t attr, std::size_t domain_idx) const;
  RowSet all_rows() const { return RowSet::full(row_count()); }

  bool operator==(const DecisionTable& o) const {
    return attribute_names_ == o.attribute_names_ && rows_ == o.rows_ &&
           decisions_ == o.decisions_;
  }

private:
  void check_attribute(std::size_t attr) const;

  std::vector<std::string> attribute_names_;
  std::vector<std::vector<Value>> rows_;
  std::vector<std::string> decisions_;

  std::vector<std::vector<Value>> domains_;
  std::vector<std::vector<RowSet>> value_masks_;
  std::vector<std::vector<int>> cell_domain_idx_;
  std::vector<int> decision_ids_;
  std::vector<std::string> decision_names_;

  struct RowVectorHash {
    std::size_t operator()(const std::vector<Value>& v) const;
  };
  std::unordered_map<std::vector<Value>, std::size_t, RowVectorHash> row_lookup_;
};

// A decision table restricted to a subset of its rows; the unit every
// optimizer works on. Cheap to copy, identified by its member set alone.
struct Subtable {
  const DecisionTable* base = nullptr;
  RowSet members;

  std::size_t size() const { return members.count(); }
};

Subtable full_subtable(const DecisionTable& table);

// Rows of `sub` whose attr-column equals `value`; may be empty.
Subtable restrict_by(const Subtable& sub, std::size_t attr, Value value);

// True iff all member rows carry the same decision. Rejects empty subtables.
bool is_degenerate(const Subtable& sub);

// If degenerate, the shared decision id; otherwise -1. Rejects empty subtables.
int degenerate_decision(const Subtable& sub);

// Distinct values of the column restricted to members, ascending.
std::vector<Value> value_set(const Subtable& sub, std::size_t attr);

}  // namespace hyptree
