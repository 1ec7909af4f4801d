#include "hyptree/table_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyptree {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("table file, line " + std::to_string(line_no) + ": " + what);
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

void save_table(std::ostream& out, const DecisionTable& table) {
  out << "dtable 1\n";
  out << "attributes " << table.attribute_count() << "\n";
  for (std::size_t a = 0; a < table.attribute_count(); ++a)
    out << (a ? " " : "") << table.attribute_name(a);
  out << "\n";
  out << "rows " << table.row_count() << "\n";
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (std::size_t a = 0; a < table.attribute_count(); ++a) out << table.cell(r, a) << " ";
    out << "-> " << table.decision(r) << "\n";
  }
  if (!out) throw std::runtime_error("table write failed");
}

void save_table_file(const std::string& path, const DecisionTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_table(out, table);
}

DecisionTable load_table(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      line = strip_cr(line);
      if (!line.empty()) return;
    }
    parse_fail(line_no, "unexpected end of file");
  };

  next_line();
  if (line != "dtable 1") parse_fail(line_no, "not a dtable file");

  next_line();
  std::size_t n = 0;
  {
    std::istringstream h(line);
    std::string tag;
    if (!(h >> tag >> n) || tag != "attributes") parse_fail(line_no, "expected 'attributes <n>'");
  }

  next_line();
  std::vector<std::string> names;
  {
    std::istringstream h(line);
    std::string name;
    while (h >> name) names.push_back(name);
  }
  if (names.size() != n) parse_fail(line_no, "attribute name count does not match header");

  next_line();
  std::size_t m = 0;
  {
    std::istringstream h(line);
    std::string tag;
    if (!(h >> tag >> m) || tag != "rows") parse_fail(line_no, "expected 'rows <m>'");
  }

  std::vector<std::vector<Value>> rows;
  std::vector<std::string> decisions;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    next_line();
    std::istringstream h(line);
    std::vector<Value> row(n);
    for (std::size_t a = 0; a < n; ++a)
      if (!(h >> row[a])) parse_fail(line_no, "expected " + std::to_string(n) + " values");
    std::string arrow;
    if (!(h >> arrow) || arrow != "->") parse_fail(line_no, "expected '->' before the decision");
    // Decision is everything after "-> ", preserved verbatim.
    std::size_t pos = line.find("-> ");
    if (pos == std::string::npos) {
      pos = line.find("->");
      decisions.push_back(pos + 2 <= line.size() ? line.substr(pos + 2) : "");
    } else {
      decisions.push_back(line.substr(pos + 3));
    }
    rows.push_back(std::move(row));
  }

  try {
    return DecisionTable(std::move(names), std::move(rows), std::move(decisions));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("table file: ") + e.what());
  }
}

DecisionTable load_table_csv(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  std::vector<std::vector<std::string>> records;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream h(line);
    while (std::getline(h, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    records.push_back(std::move(cells));
  }
  if (records.size() < 2) throw std::runtime_error("csv: need a header and at least one row");

  const auto& header = records.front();
  if (header.size() < 2) throw std::runtime_error("csv: need at least one attribute column");
  std::vector<std::string> names(header.begin(), header.end() - 1);

  std::vector<std::vector<Value>> rows;
  std::vector<std::string> decisions;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw std::runtime_error("csv: row " + std::to_string(r) + " has " +
                               std::to_string(rec.size()) + " cells, expected " +
                               std::to_string(header.size()));
    std::vector<Value> row;
    for (std::size_t c = 0; c + 1 < rec.size(); ++c) {
      try {
        std::size_t used = 0;
        long v = std::stol(rec[c], &used);
        if (used != rec[c].size() || v < 0) throw std::invalid_argument("");
        row.push_back(static_cast<Value>(v));
      } catch (...) {
        throw std::runtime_error("csv: cell '" + rec[c] + "' in row " + std::to_string(r) +
                                 " is not a non-negative integer");
      }
    }
    rows.push_back(std::move(row));
    decisions.push_back(rec.back());
  }

  try {
    return DecisionTable(std::move(names), std::move(rows), std::move(decisions));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("csv: ") + e.what());
  }
}

DecisionTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return load_table_csv(in);
  return load_table(in);
}

}  // namespace hyptree
