#pragma once

#include <cstdint>
#include <vector>

#include "gpm/graph.hpp"
#include "gpm/pattern.hpp"
#include "gpm/schedule.hpp"

namespace gpm {

/// Data-graph statistics the model needs.
///   p1 = 2e / v^2            (edge probability)
///   p2 = tri * v / (2e)^2    (probability two neighbors of a vertex are adjacent)
struct GraphStats {
  double v = 0;
  double e = 0;
  double tri = 0;
  double p1 = 0;
  double p2 = 0;

  static GraphStats from_counts(double vertices, double edges, double triangles);
  static GraphStats of(const Graph& g);
};

/// Expected size of the intersection of `m` neighborhoods:
/// v for m = 0, 2e/v for m = 1, v * p1 * p2^(m-1) otherwise.
double estimate_cardinality(const GraphStats& stats, int m);

/// Exact non-negative fraction.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Fraction reduced() const;
  friend bool operator==(const Fraction& a, const Fraction& b);
};

/// f_i per loop: share of the orderings still alive before loop i that the
/// restrictions checked at loop i discard. Loops without checks get 0.
std::vector<Fraction> compute_filter_fractions(const Pattern& p, const LoopPlan& plan);

/// Survivors after each loop, survivors[0] = n!, survivors[i+1] after loop i.
std::vector<std::uint64_t> surviving_orderings(const Pattern& p, const LoopPlan& plan);

struct CostEstimate {
  std::vector<double> l;
  std::vector<double> f;
  std::vector<double> c;
  double total = 0;
};

/// cost_n = l_n (1 - f_n);  cost_i = l_i (1 - f_i) (c_i + cost_{i+1}).
double fold_cost(const std::vector<double>& l, const std::vector<double>& f, const std::vector<double>& c);

/// l_i from the size of loop i's recipe. c_i is the merge work done per
/// iteration of loop i: every candidate set materialized there (those whose
/// last parent is bound at i) costs the sum of its left-fold merge inputs.
CostEstimate estimate_cost(const GraphStats& stats, const Pattern& p, const Configuration& config);

/// Fills predicted_cost on each configuration.
void score_configurations(const GraphStats& stats, const Pattern& p, std::vector<Configuration>& configs);

/// Argmin of predicted cost; ties go to the canonically smallest, then the
/// earliest. Scores any config lacking a prediction. Throws UsageError on an
/// empty list.
std::size_t select_configuration(const GraphStats& stats, const Pattern& p, std::vector<Configuration>& configs);

}  // namespace gpm
