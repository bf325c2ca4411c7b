#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "gpm/cost_model.hpp"
#include "gpm/graph.hpp"
#include "gpm/matcher.hpp"
#include "gpm/pattern.hpp"

namespace gpm {

/// Every generated configuration plus the one the model picks.
struct PreparedPlan {
  std::vector<Configuration> configs;
  std::size_t selected = 0;
  /// Restriction generation + schedule generation + model selection.
  double preprocess_seconds = 0;
};

/// With `iep`, the pick is restricted to configurations whose tail can be
/// counted by inclusion-exclusion; throws UsageError if there are none.
PreparedPlan prepare_plan(const Pattern& p, const GraphStats& stats, bool iep);

struct BenchInput {
  std::string name;
  Graph graph;
};

struct BenchPatternInput {
  std::string name;
  Pattern pattern;
};

struct BenchRow {
  std::string pattern;
  std::string graph;
  bool iep = false;
  int workers = 1;
  Count count = 0;
  double wall_ms = 0;
  double preprocess_ms = 0;
};

/// One row per (pattern, graph, iep, workers). IEP rows are skipped for
/// patterns without an IEP-eligible configuration.
std::vector<BenchRow> run_bench(const std::vector<BenchPatternInput>& patterns, const std::vector<BenchInput>& graphs,
                                const std::vector<bool>& iep_modes, const std::vector<int>& worker_counts);

inline constexpr const char* kBenchCsvHeader = "pattern,graph,iep,workers,count,wall_ms,preprocess_ms";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace gpm
