#include "hyptree/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hyptree/greedy.hpp"
#include "hyptree/problems.hpp"
#include "hyptree/rules.hpp"
#include "hyptree/tree.hpp"

namespace hyptree {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<MetricKind> metrics_for(AlgorithmKind algo, const std::vector<MetricKind>& requested) {
  std::vector<MetricKind> all = algo == AlgorithmKind::Exact
                                    ? std::vector<MetricKind>{MetricKind::Depth, MetricKind::Nodes}
                                    : std::vector<MetricKind>{MetricKind::Depth, MetricKind::Nodes,
                                                              MetricKind::RuleLength};
  if (requested.empty()) return all;
  std::vector<MetricKind> out;
  for (MetricKind m : all)
    if (std::find(requested.begin(), requested.end(), m) != requested.end()) out.push_back(m);
  return out;
}

struct NResult {
  // cells indexed [algorithm][metric][k-1]
  std::array<std::array<std::array<ReportCell, 5>, 3>, 2> cells;
};

NResult compute_for_n(const ReportSpec& spec, int n) {
  NResult res;
  DecisionTable table = build_problem_table(spec.problem, n);

  bool want_exact = std::find(spec.algorithms.begin(), spec.algorithms.end(),
                              AlgorithmKind::Exact) != spec.algorithms.end();
  bool want_greedy = std::find(spec.algorithms.begin(), spec.algorithms.end(),
                               AlgorithmKind::Greedy) != spec.algorithms.end();

  auto cell_at = [&](AlgorithmKind a, MetricKind m, int k) -> ReportCell& {
    return res.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)]
                    [static_cast<std::size_t>(k - 1)];
  };

  if (want_exact) {
    DpEngine engine(table, spec.dp_options);
    auto exact_metrics = metrics_for(AlgorithmKind::Exact, spec.metrics);
    for (MetricKind m : exact_metrics) {
      CostModel cm = m == MetricKind::Depth ? CostModel::Depth : CostModel::RealizableNodes;
      for (int k = 1; k <= 5; ++k) {
        ReportCell& cell = cell_at(AlgorithmKind::Exact, m, k);
        auto start = Clock::now();
        try {
          cell.int_value = engine.optimal_cost(k, cm);
        } catch (...) {
          cell.omitted = true;
        }
        cell.wall_ms = ms_since(start);
      }
    }
  }

  if (want_greedy) {
    auto greedy_metrics = metrics_for(AlgorithmKind::Greedy, spec.metrics);
    GreedyConfig config;
    config.proper_scope = spec.dp_options.proper_scope;
    for (int k = 1; k <= 5; ++k) {
      try {
        auto start = Clock::now();
        DecisionTree tree = greedy_tree(table, k, config);
        double build_ms = ms_since(start);
        for (MetricKind m : greedy_metrics) {
          ReportCell& cell = cell_at(AlgorithmKind::Greedy, m, k);
          auto mstart = Clock::now();
          switch (m) {
            case MetricKind::Depth:
              cell.int_value = depth(tree);
              cell.wall_ms = build_ms + ms_since(mstart);
              break;
            case MetricKind::Nodes:
              cell.int_value = realizable_count(table, tree);
              cell.wall_ms = ms_since(mstart);
              break;
            case MetricKind::RuleLength:
              cell.is_real = true;
              cell.real_value = tree_rule_stats(table, tree).mean_min_length;
              cell.wall_ms = ms_since(mstart);
              break;
          }
        }
      } catch (...) {
        for (MetricKind m : greedy_metrics) cell_at(AlgorithmKind::Greedy, m, k).omitted = true;
      }
    }
  }
  return res;
}

void flag_minima(ReportTable& table) {
  for (auto& row : table.rows) {
    bool any = false;
    std::int64_t imin = 0;
    double rmin = 0.0;
    for (const ReportCell& c : row) {
      if (c.omitted) continue;
      if (!any) {
        any = true;
        imin = c.int_value;
        rmin = c.real_value;
      } else if (c.is_real) {
        rmin = std::min(rmin, c.real_value);
      } else {
        imin = std::min(imin, c.int_value);
      }
    }
    if (!any) continue;
    for (ReportCell& c : row) {
      if (c.omitted) continue;
      c.is_min = c.is_real ? c.real_value <= rmin + 1e-9 : c.int_value == imin;
    }
  }
}

std::string cell_text(const ReportCell& c) {
  if (c.omitted) return "-";
  if (c.is_real) return format_real2(c.real_value);
  return std::to_string(c.int_value);
}

}  // namespace

const char* problem_name(ProblemKind p) {
  return p == ProblemKind::Monotone ? "monotone" : "sorting";
}

const char* algorithm_name(AlgorithmKind a) {
  return a == AlgorithmKind::Exact ? "exact" : "greedy";
}

const char* metric_name(MetricKind m) {
  switch (m) {
    case MetricKind::Depth: return "depth";
    case MetricKind::Nodes: return "nodes";
    case MetricKind::RuleLength: return "rule-length";
  }
  return "?";
}

std::pair<int, int> problem_range(ProblemKind p) {
  return p == ProblemKind::Monotone ? std::pair{2, 4} : std::pair{3, 6};
}

DecisionTable build_problem_table(ProblemKind p, int n) {
  return p == ProblemKind::Monotone ? build_monotone_table(n) : build_sorting_table(n);
}

Report run_report(const ReportSpec& spec) {
  auto [lo, hi] = problem_range(spec.problem);
  int n_min = spec.n_min == 0 ? lo : spec.n_min;
  int n_max = spec.n_max == 0 ? hi : spec.n_max;
  if (n_min < lo || n_max > hi || n_min > n_max)
    throw std::invalid_argument(std::string("report range for ") + problem_name(spec.problem) +
                                " must lie within " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  if (spec.algorithms.empty()) throw std::invalid_argument("report needs at least one algorithm");
  for (MetricKind m : spec.metrics)
    if (m == MetricKind::RuleLength &&
        std::find(spec.algorithms.begin(), spec.algorithms.end(), AlgorithmKind::Greedy) ==
            spec.algorithms.end())
      throw std::invalid_argument("rule-length is reported for greedy trees only");

  std::vector<int> ns;
  for (int n = n_min; n <= n_max; ++n) ns.push_back(n);

  std::vector<NResult> results(ns.size());
  if (spec.jobs > 1) {
    std::vector<std::future<NResult>> futures;
    for (int n : ns)
      futures.push_back(std::async(std::launch::async, [&spec, n] { return compute_for_n(spec, n); }));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) results[i] = compute_for_n(spec, ns[i]);
  }

  Report report;
  report.problem = spec.problem;
  for (AlgorithmKind algo : {AlgorithmKind::Exact, AlgorithmKind::Greedy}) {
    if (std::find(spec.algorithms.begin(), spec.algorithms.end(), algo) == spec.algorithms.end())
      continue;
    for (MetricKind m : metrics_for(algo, spec.metrics)) {
      ReportTable table;
      table.algorithm = algo;
      table.metric = m;
      table.ns = ns;
      for (std::size_t i = 0; i < ns.size(); ++i)
        table.rows.push_back(results[i].cells[static_cast<std::size_t>(algo)]
                                             [static_cast<std::size_t>(m)]);
      flag_minima(table);
      report.tables.push_back(std::move(table));
    }
  }
  return report;
}

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Markdown) {
    std::ostringstream out;
    out << "# report: " << problem_name(report.problem) << "\n";
    for (const ReportTable& t : report.tables) {
      out << "\n## " << algorithm_name(t.algorithm) << " " << metric_name(t.metric) << "\n\n";
      out << "| n | type 1 | type 2 | type 3 | type 4 | type 5 |\n";
      out << "| --- | --- | --- | --- | --- | --- |\n";
      for (std::size_t i = 0; i < t.ns.size(); ++i) {
        out << "| " << t.ns[i] << " |";
        for (const ReportCell& c : t.rows[i]) {
          std::string text = cell_text(c);
          out << " " << (c.is_min && !c.omitted ? "**" + text + "**" : text) << " |";
        }
        out << "\n";
      }
    }
    return out.str();
  }

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "problem,algorithm,metric,n,type,value,is_min\n";
    for (const ReportTable& t : report.tables)
      for (std::size_t i = 0; i < t.ns.size(); ++i)
        for (int k = 1; k <= 5; ++k) {
          const ReportCell& c = t.rows[i][static_cast<std::size_t>(k - 1)];
          out << problem_name(report.problem) << "," << algorithm_name(t.algorithm) << ","
              << metric_name(t.metric) << "," << t.ns[i] << "," << k << "," << cell_text(c) << ","
              << (c.is_min && !c.omitted ? 1 : 0) << "\n";
        }
    return out.str();
  }

  nlohmann::json j;
  j["problem"] = problem_name(report.problem);
  j["tables"] = nlohmann::json::array();
  for (const ReportTable& t : report.tables) {
    nlohmann::json jt;
    jt["algorithm"] = algorithm_name(t.algorithm);
    jt["metric"] = metric_name(t.metric);
    jt["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < t.ns.size(); ++i) {
      nlohmann::json jr;
      jr["n"] = t.ns[i];
      jr["cells"] = nlohmann::json::array();
      for (int k = 1; k <= 5; ++k) {
        const ReportCell& c = t.rows[i][static_cast<std::size_t>(k - 1)];
        nlohmann::json jc;
        jc["type"] = k;
        if (c.omitted) {
          jc["omitted"] = true;
        } else if (c.is_real) {
          jc["value"] = std::stod(format_real2(c.real_value));
        } else {
          jc["value"] = c.int_value;
        }
        jc["is_min"] = c.is_min && !c.omitted;
        jc["wall_ms"] = c.wall_ms;
        jr["cells"].push_back(std::move(jc));
      }
      jt["rows"].push_back(std::move(jr));
    }
    j["tables"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

}  // namespace hyptree
