// Acceptance driver: `acceptance <n>` runs criterion n (1-9), `acceptance all`
// runs every one. Prints one PASS/FAIL line per criterion; exits 1 on FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gpm/bench.hpp"
#include "gpm/cost_model.hpp"
#include "gpm/generators.hpp"
#include "gpm/iep.hpp"
#include "gpm/matcher.hpp"
#include "gpm/oracle.hpp"
#include "gpm/parallel.hpp"
#include "gpm/restriction.hpp"
#include "gpm/schedule.hpp"
#include "gpm/suite.hpp"
#include "oracles.hpp"

namespace {

using namespace gpm;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

bool report(int n, const Verdict& v, double secs) {
  std::printf("criterion %d: %s  %s (%.1f s)\n", n, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
  std::fflush(stdout);
  return v.pass;
}

void note(const std::string& line) {
  std::printf("  %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<Graph>& small_graphs() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(erdos_renyi(25, 0.3, seed));
    return out;
  }();
  return graphs;
}

const Graph& powerlaw_graph() {
  static const Graph g = barabasi_albert(5000, 20, 7);
  return g;
}

Verdict restriction_completeness() {
  Verdict v;
  std::size_t sets = 0;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    for (const auto& rs : res_set_generation(p)) {
      ++sets;
      if (!validate(p, rs)) {
        v.pass = false;
        note(np.name + ": set {" + rs.to_string() + "} fails on K_n");
      }
    }
  }
  v.detail = fmt("%zu sets over %zu patterns", sets, pattern_suite().size());
  return v;
}

Verdict orbit_identity() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    const std::uint64_t aut = automorphisms(p).size();
    std::uint64_t fact = 1;
    for (int i = 2; i <= p.size(); ++i) fact *= static_cast<std::uint64_t>(i);
    const auto schedule = generate_schedules(p).front();
    for (const auto& rs : res_set_generation(p)) {
      const auto c = make_configuration(p, schedule, rs);
      ++checked;
      const auto hits = oracles::orderings_satisfying(p.size(), c.restrictions);
      if (hits * aut != fact) {
        v.pass = false;
        note(fmt("%s {%s}: %llu orderings, expected %llu", np.name.c_str(), c.restrictions.to_string().c_str(),
                 static_cast<unsigned long long>(hits), static_cast<unsigned long long>(fact / aut)));
      }
      std::uint64_t num = 1;
      std::uint64_t den = 1;
      for (const auto& f : compute_filter_fractions(p, c.plan)) {
        num *= f.den - f.num;
        den *= f.den;
        const auto g = std::gcd(num, den);
        num /= g;
        den /= g;
      }
      if (num != 1 || den != aut) {
        v.pass = false;
        note(fmt("%s {%s}: product of (1-f) is %llu/%llu", np.name.c_str(), c.restrictions.to_string().c_str(),
                 static_cast<unsigned long long>(num), static_cast<unsigned long long>(den)));
      }
    }
  }
  v.detail = fmt("%zu restriction sets", checked);
  return v;
}

Verdict configuration_invariance() {
  Verdict v;
  std::size_t runs = 0;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    const auto configs = enumerate_configurations(p);
    for (std::size_t gi = 0; gi < small_graphs().size(); ++gi) {
      const auto& g = small_graphs()[gi];
      const auto expected = oracle_count(g, p);
      for (const auto& c : configs) {
        ++runs;
        const auto got = match(g, p, c).count;
        if (got != expected) {
          v.pass = false;
          note(fmt("%s graph %zu {%s}: %llu vs oracle %llu", np.name.c_str(), gi + 1, c.restrictions.to_string().c_str(),
                   static_cast<unsigned long long>(got), static_cast<unsigned long long>(expected)));
        }
      }
    }
  }
  v.detail = fmt("%zu configuration runs", runs);
  return v;
}

Verdict iep_equivalence() {
  Verdict v;
  std::vector<const Graph*> graphs;
  for (const auto& g : small_graphs()) graphs.push_back(&g);
  static const Graph denser = erdos_renyi(40, 0.2, 4);
  graphs.push_back(&denser);
  std::size_t runs = 0;
  std::size_t refused = 0;
  int patterns = 0;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    if (schedulable_tail_width(p) < 2) continue;
    ++patterns;
    std::vector<Configuration> eligible;
    for (auto& c : enumerate_configurations(p)) {
      if (iep_eligible_width(p, c) > 0) {
        eligible.push_back(std::move(c));
      } else {
        ++refused;
      }
    }
    if (eligible.empty()) {
      v.pass = false;
      note(np.name + ": no configuration can use IEP");
      continue;
    }
    std::set<Count> corrections;
    for (const auto* g : graphs) {
      for (const auto& c : eligible) {
        MatchOptions on;
        on.iep = true;
        const auto with = match(*g, p, c, on);
        const auto without = match(*g, p, c).count;
        corrections.insert(with.stats.correction);
        ++runs;
        if (with.count != without) {
          v.pass = false;
          note(fmt("%s {%s}: iep %llu vs %llu", np.name.c_str(), c.restrictions.to_string().c_str(),
                   static_cast<unsigned long long>(with.count), static_cast<unsigned long long>(without)));
        }
      }
    }
    std::string xs;
    for (auto x : corrections) xs += (xs.empty() ? "" : ",") + std::to_string(x);
    note(fmt("%s: %zu eligible configurations, x in {%s}", np.name.c_str(), eligible.size(), xs.c_str()));
  }
  v.detail = fmt("%d patterns, %zu runs, %zu configurations without an exact correction skipped", patterns, runs,
                 refused);
  return v;
}

Verdict schedule_filters() {
  Verdict v;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    if (p.size() > 6) continue;
    if (generate_schedules(p) != oracles::schedules_by_enumeration(p)) {
      v.pass = false;
      note(np.name + ": emitted schedules differ from the enumeration");
    }
  }
  // House: A=0 B=1 C=2 D=3 E=4; the last two loops should be {D,E}.
  const auto house = find_suite_pattern("house")->pattern();
  std::size_t de = 0;
  std::size_t other = 0;
  for (const auto& s : generate_schedules(house)) {
    const std::set<int> tail{s.order[3], s.order[4]};
    (tail == std::set<int>{3, 4} ? de : other)++;
  }
  if (other > 0) {
    v.pass = false;
    note(fmt("house: %zu schedules end in {D,E}, %zu end elsewhere", de, other));
  }
  v.detail = "filters match enumeration; house tail " + std::string(other ? "not always {D,E}" : "always {D,E}");
  return v;
}

// Two configurations with equal signatures run identical code: same parent
// positions and same restriction positions at every loop.
using PlanSignature = std::vector<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>>;

PlanSignature signature(const Configuration& c) {
  PlanSignature sig;
  for (const auto& step : c.plan.loops) {
    std::vector<int> lower;
    std::vector<int> upper;
    for (auto r : step.checks) {
      if (r.greater == step.vertex) {
        lower.push_back(c.schedule.position_of(r.lesser));
      } else {
        upper.push_back(c.schedule.position_of(r.greater));
      }
    }
    std::sort(lower.begin(), lower.end());
    std::sort(upper.begin(), upper.end());
    sig.emplace_back(step.parents, lower, upper);
  }
  return sig;
}

double timed_run(const Graph& g, const Pattern& p, const Configuration& c, std::optional<Clock::time_point> deadline,
                 bool* finished) {
  MatchOptions opts;
  opts.deadline = deadline;
  const auto r = match(g, p, c, opts);
  *finished = !r.stats.timed_out;
  return r.stats.wall_seconds;
}

Verdict model_quality() {
  constexpr double kBudget = 1800;
  const auto start = Clock::now();
  const auto& g = powerlaw_graph();
  const auto stats = GraphStats::of(g);
  note(fmt("graph: %zu vertices, %zu edges", g.vertex_count(), g.edge_count()));

  struct Job {
    std::string name;
    Pattern pattern;
    PreparedPlan plan;
    std::vector<std::size_t> distinct;
    double weight = 0;
  };
  std::vector<Job> jobs;
  for (const auto& np : pattern_suite()) {
    Job job{np.name, np.pattern(), prepare_plan(np.pattern(), stats, false), {}, 0};
    std::set<PlanSignature> seen{signature(job.plan.configs[job.plan.selected])};
    for (std::size_t i = 0; i < job.plan.configs.size(); ++i) {
      if (seen.insert(signature(job.plan.configs[i])).second) job.distinct.push_back(i);
    }
    const auto& sel = job.plan.configs[job.plan.selected];
    job.weight = *sel.predicted_cost * static_cast<double>(job.distinct.size() + 1);
    jobs.push_back(std::move(job));
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.weight < b.weight; });

  int passing = 0;
  int evaluated = 0;
  for (const auto& job : jobs) {
    const double left = kBudget - seconds_since(start);
    if (left <= 0) {
      note(job.name + ": not evaluated (budget spent)");
      continue;
    }
    const auto& sel = job.plan.configs[job.plan.selected];
    bool done = false;
    double t_sel = timed_run(g, job.pattern, sel, Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                                      std::chrono::duration<double>(left)),
                             &done);
    if (!done) {
      note(job.name + ": selected configuration did not finish within the remaining budget");
      continue;
    }
    // Short runs are noisy; keep the best of three.
    for (int rep = 0; rep < 2 && t_sel < 1.0; ++rep) {
      bool again = false;
      t_sel = std::min(t_sel, timed_run(g, job.pattern, sel, std::nullopt, &again));
    }
    const double bar = t_sel / 3.0;
    bool beaten = false;
    bool complete = true;
    double best = t_sel;
    for (std::size_t idx : job.distinct) {
      const double remaining = kBudget - seconds_since(start);
      if (remaining <= 0) {
        complete = false;
        break;
      }
      const double cap = std::min(bar, remaining);
      bool finished = false;
      const double t = timed_run(g, job.pattern, job.plan.configs[idx],
                                 Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                    std::chrono::duration<double>(cap)),
                                 &finished);
      if (finished) {
        best = std::min(best, t);
        if (t * 3.0 < t_sel) {
          beaten = true;
          break;
        }
      } else if (cap < bar) {
        complete = false;
        break;
      }
    }
    if (!beaten && !complete) {
      note(fmt("%s: not evaluated, budget spent while timing %zu distinct plans (selected %.3f s)", job.name.c_str(),
               job.distinct.size() + 1, t_sel));
      continue;
    }
    ++evaluated;
    if (!beaten) ++passing;
    note(fmt("%s: selected %.3f s, best seen %.3f s over %zu distinct plans -> %s", job.name.c_str(), t_sel, best,
             job.distinct.size() + 1, beaten ? "more than 3x slower" : "within 3x"));
  }
  const int total = static_cast<int>(jobs.size());
  Verdict v;
  v.pass = passing * 5 >= total * 4;
  v.detail = fmt("%d/%d patterns within 3x of the best (%d evaluated, need %d)", passing, total, evaluated,
                 (total * 4 + 4) / 5);
  return v;
}

Verdict iep_speedup() {
  const auto& g = powerlaw_graph();
  const auto stats = GraphStats::of(g);
  const auto p = find_suite_pattern("cycle6-tri")->pattern();
  const auto off_plan = prepare_plan(p, stats, false);
  const auto on_plan = prepare_plan(p, stats, true);
  const auto off = match(g, p, off_plan.configs[off_plan.selected]);
  MatchOptions opts;
  opts.iep = true;
  const auto on = match(g, p, on_plan.configs[on_plan.selected], opts);
  Verdict v;
  const double ratio = off.stats.wall_seconds / on.stats.wall_seconds;
  v.pass = on.count == off.count && ratio >= 2.0;
  v.detail = fmt("cycle6-tri off %.3f s, on %.3f s, %.2fx, counts %llu/%llu", off.stats.wall_seconds,
                 on.stats.wall_seconds, ratio, static_cast<unsigned long long>(off.count),
                 static_cast<unsigned long long>(on.count));
  return v;
}

Verdict parallel_scaling() {
  const auto& g = powerlaw_graph();
  const auto stats = GraphStats::of(g);
  Verdict v;
  const auto house = find_suite_pattern("house")->pattern();
  const auto plan = prepare_plan(house, stats, false);
  const auto& config = plan.configs[plan.selected];
  std::map<int, double> wall;
  Count reference = 0;
  bool first = true;
  for (int workers : {1, 2, 4, 8}) {
    for (int depth : {1, 2}) {
      const auto r = run_parallel(g, house, config, workers, depth);
      if (first) reference = r.count;
      first = false;
      if (r.count != reference) {
        v.pass = false;
        note(fmt("house workers=%d depth=%d: %llu vs %llu", workers, depth, static_cast<unsigned long long>(r.count),
                 static_cast<unsigned long long>(reference)));
      }
      if (depth == 2) wall[workers] = r.stats.wall_seconds;
    }
  }
  // Determinism on a second pattern with a different shape.
  const auto tri = find_suite_pattern("cycle6-tri")->pattern();
  const auto tri_plan = prepare_plan(tri, stats, false);
  const auto tri_ref = run_parallel(g, tri, tri_plan.configs[tri_plan.selected], 1, 1).count;
  for (int workers : {2, 4, 8}) {
    for (int depth : {1, 2}) {
      if (run_parallel(g, tri, tri_plan.configs[tri_plan.selected], workers, depth).count != tri_ref) {
        v.pass = false;
        note(fmt("cycle6-tri workers=%d depth=%d differs", workers, depth));
      }
    }
  }
  const double speedup = wall[1] / wall[8];
  const bool counts_ok = v.pass;
  v.pass = v.pass && speedup >= 3.0;
  v.detail = fmt("counts %s; house 1 worker %.2f s, 8 workers %.2f s, speedup %.2fx on %u hardware threads",
                 counts_ok ? "identical" : "DIFFER", wall[1], wall[8], speedup, std::thread::hardware_concurrency());
  return v;
}

Verdict preprocessing() {
  const auto stats = GraphStats::of(powerlaw_graph());
  Verdict v;
  double worst = 0;
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    if (p.size() != 6) continue;
    const auto t0 = Clock::now();
    const auto plan = prepare_plan(p, stats, false);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    note(fmt("%s: %zu configurations, %.3f s", np.name.c_str(), plan.configs.size(), secs));
    if (secs >= 5.0) v.pass = false;
  }
  v.detail = fmt("slowest 6-vertex pattern %.3f s", worst);
  return v;
}

bool run(int n) {
  const auto t0 = Clock::now();
  Verdict v;
  switch (n) {
    case 1: v = restriction_completeness(); break;
    case 2: v = orbit_identity(); break;
    case 3: v = configuration_invariance(); break;
    case 4: v = iep_equivalence(); break;
    case 5: v = schedule_filters(); break;
    case 6: v = model_quality(); break;
    case 7: v = iep_speedup(); break;
    case 8: v = parallel_scaling(); break;
    case 9: v = preprocessing(); break;
    default: return false;
  }
  const double secs = seconds_since(t0);
  static const double limits[] = {60, 10, 600, 600, 5, 1800, 600, 600, 60};
  if (secs > limits[n - 1]) {
    v.pass = false;
    v.detail += fmt("; over the %.0f s limit", limits[n - 1]);
  }
  return report(n, v, secs);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <1-9|all>\n");
    return 2;
  }
  const std::string arg = argv[1];
  if (arg == "all") {
    bool ok = true;
    for (int n = 1; n <= 9; ++n) ok = run(n) && ok;
    return ok ? 0 : 1;
  }
  const int n = std::atoi(arg.c_str());
  if (n < 1 || n > 9) {
    std::fprintf(stderr, "usage: acceptance <1-9|all>\n");
    return 2;
  }
  return run(n) ? 0 : 1;
}
