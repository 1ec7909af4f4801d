#include "hyptree/table.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace hyptree {

namespace {

bool valid_attribute_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name)
    if (std::isspace(c) || std::iscntrl(c)) return false;
  return true;
}

bool valid_decision(const std::string& d) {
  for (unsigned char c : d)
    if (c == '\n' || c == '\r') return false;
  return true;
}

}  // namespace

std::size_t DecisionTable::RowVectorHash::operator()(const std::vector<Value>& v) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (Value x : v) {
    std::uint64_t y = static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    y = (y ^ (y >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h ^= (y ^ (y >> 27)) + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

DecisionTable::DecisionTable(std::vector<std::string> attribute_names,
                             std::vector<std::vector<Value>> rows,
                             std::vector<std::string> decisions)
    : attribute_names_(std::move(attribute_names)),
      rows_(std::move(rows)),
      decisions_(std::move(decisions)) {
  const std::size_t n = attribute_names_.size();
  const std::size_t m = rows_.size();

  if (decisions_.size() != m)
    throw std::invalid_argument("decision table: one decision per row required");
  for (const auto& name : attribute_names_)
    if (!valid_attribute_name(name))
      throw std::invalid_argument("decision table: attribute names must be nonempty and free of whitespace");
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : attribute_names_)
      if (!seen.insert(name).second)
        throw std::invalid_argument("decision table: duplicate attribute name '" + name + "'");
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (rows_[r].size() != n)
      throw std::invalid_argument("decision table: row " + std::to_string(r) + " has wrong width");
    for (Value v : rows_[r])
      if (v < 0)
        throw std::invalid_argument("decision table: negative value in row " + std::to_string(r));
    if (!valid_decision(decisions_[r]))
      throw std::invalid_argument("decision table: decision of row " + std::to_string(r) + " contains a line break");
  }

  row_lookup_.reserve(m);
  for (std::size_t r = 0; r < m; ++r)
    if (!row_lookup_.emplace(rows_[r], r).second)
      throw std::invalid_argument("decision table: duplicate row " + std::to_string(r));

  // Decisions label rows uniquely; dense ids are assigned in row order.
  decision_ids_.resize(m);
  {
    std::unordered_map<std::string, int> ids;
    ids.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
      auto [it, fresh] = ids.emplace(decisions_[r], static_cast<int>(decision_names_.size()));
      if (!fresh)
        throw std::invalid_argument("decision table: decision '" + decisions_[r] + "' labels more than one row");
      decision_names_.push_back(decisions_[r]);
      decision_ids_[r] = it->second;
    }
  }

  domains_.resize(n);
  value_masks_.resize(n);
  cell_domain_idx_.assign(m, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Value> col;
    col.reserve(m);
    for (std::size_t r = 0; r < m; ++r) col.push_back(rows_[r][a]);
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    domains_[a] = std::move(col);

    value_masks_[a].assign(domains_[a].size(), RowSet(m));
    for (std::size_t r = 0; r < m; ++r) {
      int di = domain_index(a, rows_[r][a]);
      value_masks_[a][static_cast<std::size_t>(di)].set(r);
      cell_domain_idx_[r][a] = di;
    }
  }
}

void DecisionTable::check_attribute(std::size_t attr) const {
  if (attr >= attribute_names_.size())
    throw std::invalid_argument("invalid attribute index " + std::to_string(attr));
}

const std::string& DecisionTable::attribute_name(std::size_t attr) const {
  check_attribute(attr);
  return attribute_names_[attr];
}

int DecisionTable::attribute_index(std::string_view name) const {
  for (std::size_t a = 0; a < attribute_names_.size(); ++a)
    if (attribute_names_[a] == name) return static_cast<int>(a);
  return -1;
}

const std::vector<Value>& DecisionTable::domain(std::size_t attr) const {
  check_attribute(attr);
  return domains_[attr];
}

int DecisionTable::domain_index(std::size_t attr, Value v) const {
  check_attribute(attr);
  const auto& dom = domains_[attr];
  auto it = std::lower_bound(dom.begin(), dom.end(), v);
  if (it == dom.end() || *it != v) return -1;
  return static_cast<int>(it - dom.begin());
}

int DecisionTable::cell_domain_index(std::size_t row, std::size_t attr) const {
  return cell_domain_idx_[row][attr];
}

Value DecisionTable::cell(std::size_t row, std::size_t attr) const {
  return rows_[row][attr];
}

const std::vector<Value>& DecisionTable::row(std::size_t r) const { return rows_[r]; }

const std::string& DecisionTable::decision(std::size_t r) const { return decisions_[r]; }

int DecisionTable::find_row(const std::vector<Value>& values) const {
  auto it = row_lookup_.find(values);
  return it == row_lookup_.end() ? -1 : static_cast<int>(it->second);
}

const RowSet& DecisionTable::value_mask(std::size_t attr, std::size_t domain_idx) const {
  check_attribute(attr);
  return value_masks_[attr][domain_idx];
}

Subtable full_subtable(const DecisionTable& table) {
  return Subtable{&table, table.all_rows()};
}

Subtable restrict_by(const Subtable& sub, std::size_t attr, Value value) {
  const DecisionTable& t = *sub.base;
  int di = t.domain_index(attr, value);  // validates attr
  if (di < 0) return Subtable{sub.base, RowSet(t.row_count())};
  return Subtable{sub.base, sub.members & t.value_mask(attr, static_cast<std::size_t>(di))};
}

int degenerate_decision(const Subtable& sub) {
  if (sub.members.empty())
    throw std::invalid_argument("degeneracy is undefined for an empty subtable");
  const DecisionTable& t = *sub.base;
  int dec = -1;
  bool mixed = false;
  sub.members.for_each([&](std::size_t r) {
    int d = t.decision_id(r);
    if (dec < 0)
      dec = d;
    else if (d != dec)
      mixed = true;
  });
  return mixed ? -1 : dec;
}

bool is_degenerate(const Subtable& sub) { return degenerate_decision(sub) >= 0; }

std::vector<Value> value_set(const Subtable& sub, std::size_t attr) {
  if (sub.members.empty())
    throw std::invalid_argument("value_set is undefined for an empty subtable");
  const DecisionTable& t = *sub.base;
  const auto& dom = t.domain(attr);  // validates attr
  std::vector<Value> out;
  for (std::size_t di = 0; di < dom.size(); ++di)
    if (RowSet::and_count(sub.members, t.value_mask(attr, di)) > 0) out.push_back(dom[di]);
  return out;
}

}  // namespace hyptree
