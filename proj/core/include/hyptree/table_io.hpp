#pragma once

#include <iosfwd>
#include <string>

#include "hyptree/table.hpp"

namespace hyptree {

// Native text format:
//   dtable 1
//   attributes <n>
//   <name_1> ... <name_n>
//   rows <m>
//   <v_1> ... <v_n> -> <decision to end of line>
// save/load round-trips a table exactly.
void save_table(std::ostream& out, const DecisionTable& table);
void save_table_file(const std::string& path, const DecisionTable& table);

DecisionTable load_table(std::istream& in);

// Plain CSV: header row names the attributes (last column is the decision),
// each following row holds the values and the decision label.
DecisionTable load_table_csv(std::istream& in);

// Dispatches on the ".csv" extension.
DecisionTable load_table_file(const std::string& path);

}  // namespace hyptree
