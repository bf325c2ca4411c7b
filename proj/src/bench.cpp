#include "gpm/bench.hpp"

#include <chrono>
#include <cstdio>

#include "gpm/errors.hpp"
#include "gpm/iep.hpp"

namespace gpm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PreparedPlan prepare_plan(const Pattern& p, const GraphStats& stats, bool iep) {
  const auto start = std::chrono::steady_clock::now();
  PreparedPlan plan;
  plan.configs = enumerate_configurations(p);
  if (!iep) {
    plan.selected = select_configuration(stats, p, plan.configs);
    plan.preprocess_seconds = seconds_since(start);
    return plan;
  }
  score_configurations(stats, p, plan.configs);
  std::vector<std::size_t> index;
  std::vector<Configuration> eligible;
  for (std::size_t i = 0; i < plan.configs.size(); ++i) {
    if (tail_width(p, plan.configs[i].schedule) < 2) continue;
    const int k = iep_eligible_width(p, plan.configs[i]);
    if (k == 0) continue;
    index.push_back(i);
    eligible.push_back(plan.configs[i]);
    eligible.back().predicted_cost = estimate_iep_cost(stats, p, plan.configs[i], k);
  }
  if (eligible.empty()) {
    throw UsageError("IEP needs at least 2 pairwise-nonadjacent vertices at the end of a schedule; pattern " +
                     p.to_string() + " has no such schedule");
  }
  plan.selected = index[select_configuration(stats, p, eligible)];
  plan.preprocess_seconds = seconds_since(start);
  return plan;
}

std::vector<BenchRow> run_bench(const std::vector<BenchPatternInput>& patterns, const std::vector<BenchInput>& graphs,
                                const std::vector<bool>& iep_modes, const std::vector<int>& worker_counts) {
  std::vector<BenchRow> rows;
  for (const auto& pat : patterns) {
    for (const auto& in : graphs) {
      const auto stats = GraphStats::of(in.graph);
      for (bool iep : iep_modes) {
        PreparedPlan plan;
        try {
          plan = prepare_plan(pat.pattern, stats, iep);
        } catch (const UsageError&) {
          if (iep) continue;
          throw;
        }
        for (int workers : worker_counts) {
          MatchOptions opts;
          opts.iep = iep;
          opts.workers = workers;
          const auto result = match(in.graph, pat.pattern, plan.configs[plan.selected], opts);
          rows.push_back({pat.name, in.name, iep, workers, result.count, result.stats.wall_seconds * 1e3,
                          plan.preprocess_seconds * 1e3});
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    out << r.pattern << ',' << r.graph << ',' << (r.iep ? "on" : "off") << ',' << r.workers << ',' << r.count << ',';
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", r.wall_ms, r.preprocess_ms);
    out << buf << '\n';
  }
}

}  // namespace gpm
