#include "gpm/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gpm/errors.hpp"
#include "gpm/restriction.hpp"

namespace gpm {

GraphStats GraphStats::from_counts(double vertices, double edges, double triangles) {
  GraphStats s;
  s.v = vertices;
  s.e = edges;
  s.tri = triangles;
  s.p1 = vertices > 0 ? 2.0 * edges / (vertices * vertices) : 0.0;
  s.p2 = edges > 0 ? triangles * vertices / ((2.0 * edges) * (2.0 * edges)) : 0.0;
  return s;
}

GraphStats GraphStats::of(const Graph& g) {
  return from_counts(static_cast<double>(g.vertex_count()), static_cast<double>(g.edge_count()),
                     static_cast<double>(g.triangle_count()));
}

double estimate_cardinality(const GraphStats& stats, int m) {
  if (m <= 0) return stats.v;
  if (m == 1) return stats.v > 0 ? 2.0 * stats.e / stats.v : 0.0;
  return stats.v * stats.p1 * std::pow(stats.p2, m - 1);
}

Fraction Fraction::reduced() const {
  auto g = std::gcd(num, den);
  return g ? Fraction{num / g, den / g} : *this;
}

bool operator==(const Fraction& a, const Fraction& b) {
  auto x = a.reduced();
  auto y = b.reduced();
  return x.num == y.num && x.den == y.den;
}

std::vector<std::uint64_t> surviving_orderings(const Pattern& p, const LoopPlan& plan) {
  std::vector<std::uint64_t> survivors;
  survivors.reserve(plan.loops.size() + 1);
  RestrictionSet active;
  survivors.push_back(count_linear_extensions(p.size(), active));
  for (const auto& step : plan.loops) {
    for (auto r : step.checks) active.insert(r);
    survivors.push_back(step.checks.empty() ? survivors.back() : count_linear_extensions(p.size(), active));
  }
  return survivors;
}

std::vector<Fraction> compute_filter_fractions(const Pattern& p, const LoopPlan& plan) {
  auto survivors = surviving_orderings(p, plan);
  std::vector<Fraction> f;
  f.reserve(plan.loops.size());
  for (std::size_t i = 0; i < plan.loops.size(); ++i) {
    f.push_back(Fraction{survivors[i] - survivors[i + 1], survivors[i]});
  }
  return f;
}

double fold_cost(const std::vector<double>& l, const std::vector<double>& f, const std::vector<double>& c) {
  double cost = 0;
  for (std::size_t i = l.size(); i-- > 0;) {
    const double inner = (i + 1 == l.size()) ? 1.0 : c[i] + cost;
    cost = l[i] * (1.0 - f[i]) * inner;
  }
  return cost;
}

CostEstimate estimate_cost(const GraphStats& stats, const Pattern& p, const Configuration& config) {
  const auto& loops = config.plan.loops;
  const std::size_t n = loops.size();
  CostEstimate est;
  est.l.resize(n);
  est.c.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int m = static_cast<int>(loops[i].parents.size());
    est.l[i] = estimate_cardinality(stats, m);
    if (m >= 2) {
      // Left fold: m neighborhoods plus the m-2 intermediate results.
      double work = m * estimate_cardinality(stats, 1);
      for (int t = 2; t <= m - 1; ++t) work += estimate_cardinality(stats, t);
      est.c[static_cast<std::size_t>(loops[i].parents.back())] += work;
    }
  }
  for (const auto& frac : compute_filter_fractions(p, config.plan)) est.f.push_back(frac.value());
  est.total = fold_cost(est.l, est.f, est.c);
  return est;
}

void score_configurations(const GraphStats& stats, const Pattern& p, std::vector<Configuration>& configs) {
  for (auto& cfg : configs) cfg.predicted_cost = estimate_cost(stats, p, cfg).total;
}

std::size_t select_configuration(const GraphStats& stats, const Pattern& p, std::vector<Configuration>& configs) {
  if (configs.empty()) throw UsageError("no configurations to select from");
  for (auto& cfg : configs) {
    if (!cfg.predicted_cost) cfg.predicted_cost = estimate_cost(stats, p, cfg).total;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < configs.size(); ++i) {
    const double a = *configs[i].predicted_cost;
    const double b = *configs[best].predicted_cost;
    if (a < b || (a == b && canonical_less(configs[i], configs[best]))) best = i;
  }
  return best;
}

}  // namespace gpm
