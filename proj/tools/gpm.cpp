// gpm: count, list and plan subgraph pattern matches.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpm/bench.hpp"
#include "gpm/cost_model.hpp"
#include "gpm/errors.hpp"
#include "gpm/generators.hpp"
#include "gpm/graph.hpp"
#include "gpm/matcher.hpp"
#include "gpm/oracle.hpp"
#include "gpm/restriction.hpp"
#include "gpm/suite.hpp"

namespace {

using namespace gpm;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
  return value;
}

/// A file path (edge list or binary cache) or a generator:
///   gen:er:<n>:<p>:<seed>  gen:ba:<n>:<m>:<seed>
///   gen:plc:<n>:<m>:<triad_p>:<seed>  gen:complete:<n>  gen:cycle:<n>
Graph load_graph(const std::string& spec) {
  if (spec.rfind("gen:", 0) == 0) {
    const auto f = split(spec, ':');
    const std::string kind = f.size() > 1 ? f[1] : "";
    if (kind == "er" && f.size() == 5) {
      return erdos_renyi(parse_number<std::size_t>(f[2], "vertex count"), std::stod(f[3]),
                         parse_number<std::uint64_t>(f[4], "seed"));
    }
    if (kind == "ba" && f.size() == 5) {
      return barabasi_albert(parse_number<std::size_t>(f[2], "vertex count"),
                             parse_number<std::size_t>(f[3], "attachment count"),
                             parse_number<std::uint64_t>(f[4], "seed"));
    }
    if (kind == "plc" && f.size() == 6) {
      return powerlaw_cluster(parse_number<std::size_t>(f[2], "vertex count"),
                              parse_number<std::size_t>(f[3], "attachment count"), std::stod(f[4]),
                              parse_number<std::uint64_t>(f[5], "seed"));
    }
    if (kind == "complete" && f.size() == 3) return complete_graph(parse_number<std::size_t>(f[2], "vertex count"));
    if (kind == "cycle" && f.size() == 3) return cycle_graph(parse_number<std::size_t>(f[2], "vertex count"));
    throw UsageError("unknown generator '" + spec +
                     "' (expected gen:er:N:P:SEED, gen:ba:N:M:SEED, gen:plc:N:M:T:SEED, gen:complete:N or gen:cycle:N)");
  }
  if (is_cache_file(spec)) return load_cache(spec);
  return load_edge_list_file(spec);
}

std::string schedule_string(const Schedule& s) {
  std::string out;
  for (int v : s.order) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void print_config(std::ostream& out, std::size_t index, const Configuration& c) {
  out << "config      #" << index << "  schedule [" << schedule_string(c.schedule) << "]  restrictions "
      << c.restrictions.to_string() << '\n';
  std::istringstream lines(c.plan.to_string());
  for (std::string line; std::getline(lines, line);) out << "            " << line << '\n';
}

struct RunFlags {
  std::string pattern;
  std::string graph;
  bool iep = false;
  bool no_iep = false;
  int workers = 1;
  int prefix_depth = 0;
  int config = -1;
  std::string output;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("pattern", f.pattern, "Suite name or pattern spec (n:u-v,... or n*n 0/1 matrix)")->required();
  cmd->add_option("graph", f.graph, "Edge list, binary cache, or gen:... generator")->required();
  auto* on = cmd->add_flag("--iep", f.iep, "Count the innermost independent loops by inclusion-exclusion");
  auto* off = cmd->add_flag("--no-iep", f.no_iep, "Enumerate every loop (default)");
  on->excludes(off);
  cmd->add_option("--workers", f.workers, "Worker threads")->envname("GPM_WORKERS")->check(CLI::PositiveNumber);
  cmd->add_option("--prefix-depth", f.prefix_depth, "Outer loops packed into one parallel task")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--config", f.config, "Use configuration INDEX from `plan` instead of the model's pick")
      ->check(CLI::NonNegativeNumber);
}

struct Run {
  Pattern pattern;
  Graph graph;
  PreparedPlan plan;
  std::size_t chosen = 0;
  MatchResult result;
};

Run execute(const RunFlags& f, MatchMode mode) {
  Run run{resolve_pattern(f.pattern), load_graph(f.graph), {}, 0, {}};
  const auto stats = GraphStats::of(run.graph);
  run.plan = prepare_plan(run.pattern, stats, f.iep);
  run.chosen = run.plan.selected;
  if (f.config >= 0) {
    if (static_cast<std::size_t>(f.config) >= run.plan.configs.size()) {
      throw UsageError("--config " + std::to_string(f.config) + " out of range (pattern has " +
                       std::to_string(run.plan.configs.size()) + " configurations)");
    }
    run.chosen = static_cast<std::size_t>(f.config);
  }
  if (f.prefix_depth > 0 && f.prefix_depth > run.pattern.size() - 1) {
    throw UsageError("--prefix-depth must be at most " + std::to_string(run.pattern.size() - 1));
  }
  MatchOptions opts;
  opts.mode = mode;
  opts.iep = f.iep;
  opts.workers = f.workers;
  opts.prefix_depth = f.prefix_depth;
  run.result = match(run.graph, run.pattern, run.plan.configs[run.chosen], opts);
  return run;
}

void print_report(std::ostream& out, const RunFlags& f, const Run& run) {
  char buf[64];
  out << "pattern     " << f.pattern << " (" << run.pattern.to_string() << ")\n";
  out << "graph       " << f.graph << "  |V|=" << run.graph.vertex_count() << " |E|=" << run.graph.edge_count()
      << '\n';
  print_config(out, run.chosen, run.plan.configs[run.chosen]);
  out << "count       " << run.result.count << '\n';
  out << "workers     " << f.workers << '\n';
  out << "iep         " << (f.iep ? "on" : "off");
  if (f.iep) out << " (k=" << run.result.stats.iep_width << ", x=" << run.result.stats.correction << ")";
  out << '\n';
  out << "tasks       " << run.result.stats.tasks << '\n';
  std::snprintf(buf, sizeof buf, "%.3f", run.result.stats.wall_seconds * 1e3);
  out << "wall_ms     " << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.3f", run.plan.preprocess_seconds * 1e3);
  out << "preproc_ms  " << buf << '\n';
}

int cmd_plan(const std::string& pattern_arg, const std::string& graph_arg) {
  const auto pattern = resolve_pattern(pattern_arg);
  const auto graph = load_graph(graph_arg);
  const auto stats = GraphStats::of(graph);
  auto plan = prepare_plan(pattern, stats, false);
  std::printf("pattern %s  |Aut|=%zu  configurations=%zu\n", pattern.to_string().c_str(),
              automorphisms(pattern).size(), plan.configs.size());
  std::printf("%-4s %-6s %-18s %-12s %s\n", "", "index", "schedule", "cost", "restrictions");
  for (std::size_t i = 0; i < plan.configs.size(); ++i) {
    const auto& c = plan.configs[i];
    std::printf("%-4s %-6zu %-18s %-12.3e %s\n", i == plan.selected ? "*" : "", i,
                schedule_string(c.schedule).c_str(), c.predicted_cost.value_or(0), c.restrictions.to_string().c_str());
  }
  return kExitOk;
}

int cmd_count(const RunFlags& f) {
  const auto run = execute(f, MatchMode::count);
  print_report(std::cout, f, run);
  return kExitOk;
}

int cmd_list(const RunFlags& f) {
  if (f.iep) throw UsageError("--iep counts without enumerating; it cannot be combined with list");
  const auto run = execute(f, MatchMode::list);
  std::ofstream file;
  if (!f.output.empty()) {
    file.open(f.output);
    if (!file) throw IoError("cannot open " + f.output + " for writing");
  }
  std::ostream& out = f.output.empty() ? std::cout : file;
  std::string line;
  for (const auto& emb : *run.result.embeddings) {
    line.clear();
    for (Vertex v : emb) {
      if (!line.empty()) line += ' ';
      line += std::to_string(run.graph.original_id(v));
    }
    out << line << '\n';
  }
  if (!f.output.empty()) std::cerr << run.result.count << " embeddings written to " << f.output << '\n';
  return kExitOk;
}

int cmd_validate(const std::string& pattern_arg) {
  const auto pattern = resolve_pattern(pattern_arg);
  const auto group = automorphisms(pattern);
  std::printf("pattern %s\n|Aut| = %zu\n", pattern.to_string().c_str(), group.size());
  const auto sets = res_set_generation(pattern);
  bool all = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const bool ok = validate(pattern, sets[i]);
    all = all && ok;
    std::printf("set %-3zu %s  %s\n", i, ok ? "pass" : "FAIL", sets[i].to_string().c_str());
  }
  std::printf("%zu sets, %s\n", sets.size(), all ? "all pass" : "failures present");
  return all ? kExitOk : kExitInternal;
}

int cmd_oracle(const std::string& pattern_arg, const std::string& graph_arg) {
  const auto pattern = resolve_pattern(pattern_arg);
  const auto graph = load_graph(graph_arg);
  std::printf("%llu\n", static_cast<unsigned long long>(oracle_count(graph, pattern)));
  return kExitOk;
}

int cmd_stats(const std::string& graph_arg, const std::string& save_cache_to) {
  const auto graph = load_graph(graph_arg);
  const auto s = GraphStats::of(graph);
  std::printf("vertices   %zu\nedges      %zu\ntriangles  %llu\np1         %.6e\np2         %.6e\n",
              graph.vertex_count(), graph.edge_count(), static_cast<unsigned long long>(graph.triangle_count()),
              s.p1, s.p2);
  if (!save_cache_to.empty()) save_cache(graph, save_cache_to);
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& pattern_args, const std::vector<std::string>& graph_args,
              const std::string& iep_modes, const std::vector<int>& workers, const std::string& output) {
  std::vector<BenchPatternInput> patterns;
  for (const auto& p : pattern_args) patterns.push_back({p, resolve_pattern(p)});
  std::vector<BenchInput> graphs;
  for (const auto& g : graph_args) graphs.push_back({g, load_graph(g)});
  std::vector<bool> modes;
  for (const auto& m : split(iep_modes, ',')) {
    if (m == "on") {
      modes.push_back(true);
    } else if (m == "off") {
      modes.push_back(false);
    } else {
      throw UsageError("--iep-modes takes a comma list of on/off, got '" + m + "'");
    }
  }
  const auto rows = run_bench(patterns, graphs, modes, workers);
  if (output.empty()) {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream file(output);
    if (!file) throw IoError("cannot open " + output + " for writing");
    write_bench_csv(file, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph pattern matching with symmetry-breaking restrictions and a cost-model planner"};
  app.require_subcommand(1);

  std::string pattern_arg, graph_arg;

  auto* plan = app.add_subcommand("plan", "Print every configuration with its predicted cost; * marks the pick");
  plan->add_option("pattern", pattern_arg, "Suite name or pattern spec")->required();
  plan->add_option("graph", graph_arg, "Edge list, binary cache, or gen:... generator")->required();

  RunFlags count_flags;
  auto* count = app.add_subcommand("count", "Count embeddings");
  add_run_flags(count, count_flags);

  RunFlags list_flags;
  auto* list = app.add_subcommand("list", "Print embeddings, one per line, original ids in schedule order");
  add_run_flags(list, list_flags);
  list->add_option("-o,--output", list_flags.output, "Write embeddings to a file");

  auto* val = app.add_subcommand("validate", "Check every generated restriction set on the complete graph K_n");
  val->add_option("pattern", pattern_arg, "Suite name or pattern spec")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force count over all injective mappings (small graphs)");
  oracle->add_option("pattern", pattern_arg, "Suite name or pattern spec")->required();
  oracle->add_option("graph", graph_arg, "Edge list, binary cache, or gen:... generator")->required();

  std::string save_cache_to;
  auto* stats = app.add_subcommand("stats", "Print |V|, |E|, triangle count, p1 and p2");
  stats->add_option("graph", graph_arg, "Edge list, binary cache, or gen:... generator")->required();
  stats->add_option("--save-cache", save_cache_to, "Write the graph as a binary cache");

  std::vector<std::string> bench_patterns, bench_graphs;
  std::string bench_iep = "off,on";
  std::vector<int> bench_workers{1};
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Time the model's pick per pattern/graph/flag combination as CSV");
  bench->add_option("-p,--pattern", bench_patterns, "Patterns (repeatable)")->required();
  bench->add_option("-g,--graph", bench_graphs, "Graphs (repeatable)")->required();
  bench->add_option("--iep-modes", bench_iep, "Comma list of on/off")->capture_default_str();
  bench->add_option("--workers", bench_workers, "Worker counts (repeatable)")
      ->envname("GPM_WORKERS")
      ->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_output, "Write CSV to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*plan) return cmd_plan(pattern_arg, graph_arg);
    if (*count) return cmd_count(count_flags);
    if (*list) return cmd_list(list_flags);
    if (*val) return cmd_validate(pattern_arg);
    if (*oracle) return cmd_oracle(pattern_arg, graph_arg);
    if (*stats) return cmd_stats(graph_arg, save_cache_to);
    if (*bench) return cmd_bench(bench_patterns, bench_graphs, bench_iep, bench_workers, bench_output);
  } catch (const UsageError& e) {
    std::cerr << "gpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "gpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "gpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "gpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gpm: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
