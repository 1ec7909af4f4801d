#pragma once

#include <cstdint>
#include <random>

#include "hyptree/dp.hpp"
#include "hyptree/table.hpp"

namespace hyptree {

// Explicit enumeration stays tractable only on toy tables.
struct OracleLimits {
  std::size_t max_rows = 8;
  std::size_t max_attributes = 4;
  std::size_t max_domain = 2;
};

// Reference optimizer that enumerates every allowed query at every subtable,
// including every hypothesis assignment, with no decomposition shortcut. It
// shares only the table/query primitives with the dynamic-programming path,
// so agreement between the two is a meaningful check.
std::int64_t brute_force_optimal(const DecisionTable& table, int tree_type, CostModel cm,
                                 const OracleLimits& limits = {}, DpOptions options = {});

// Random table with pairwise-distinct rows over {0..domain_size-1} values and
// one decision per row. Row count is clipped to the number of distinct rows.
DecisionTable random_table(std::mt19937& rng, std::size_t rows, std::size_t attrs,
                           std::size_t domain_size);

}  // namespace hyptree
