#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyptree/dp.hpp"
#include "hyptree/table.hpp"

namespace hyptree {

enum class ProblemKind : std::uint8_t { Monotone, Sorting };
enum class AlgorithmKind : std::uint8_t { Exact, Greedy };
enum class MetricKind : std::uint8_t { Depth, Nodes, RuleLength };
enum class ReportFormat : std::uint8_t { Markdown, Csv, Json };

struct ReportSpec {
  ProblemKind problem = ProblemKind::Sorting;
  int n_min = 0;  // 0 means the full supported range
  int n_max = 0;
  std::vector<AlgorithmKind> algorithms{AlgorithmKind::Exact, AlgorithmKind::Greedy};
  std::vector<MetricKind> metrics;  // empty means every metric the algorithm reports
  DpOptions dp_options;
  int jobs = 1;
};

struct ReportCell {
  bool omitted = false;
  bool is_real = false;
  std::int64_t int_value = 0;
  double real_value = 0.0;
  bool is_min = false;
  double wall_ms = 0.0;
};

struct ReportTable {
  AlgorithmKind algorithm = AlgorithmKind::Exact;
  MetricKind metric = MetricKind::Depth;
  std::vector<int> ns;
  std::vector<std::array<ReportCell, 5>> rows;  // columns are tree types 1..5
};

struct Report {
  ProblemKind problem = ProblemKind::Sorting;
  std::vector<ReportTable> tables;
};

const char* problem_name(ProblemKind p);
const char* algorithm_name(AlgorithmKind a);
const char* metric_name(MetricKind m);

// Supported n range: monotone 2..4, sorting 3..6.
std::pair<int, int> problem_range(ProblemKind p);
DecisionTable build_problem_table(ProblemKind p, int n);

// Computes one table per requested (algorithm, metric) with rows n and
// columns tree types 1..5; per-row minima are flagged. Cells that fail to
// compute are marked omitted rather than aborting the report.
Report run_report(const ReportSpec& spec);

// Markdown and CSV renderings are deterministic; JSON additionally carries
// the per-cell wall-clock time.
std::string render_report(const Report& report, ReportFormat format);

}  // namespace hyptree
