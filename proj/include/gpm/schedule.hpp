#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gpm/pattern.hpp"
#include "gpm/restriction.hpp"

namespace gpm {

/// Search order: order[i] is the pattern vertex bound by the i-th loop.
struct Schedule {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  /// Loop index at which pattern vertex `v` is bound.
  int position_of(int v) const;

  friend auto operator<=>(const Schedule&, const Schedule&) = default;
};

/// Every vertex after the first is adjacent to an earlier one.
bool satisfies_connectivity(const Pattern& p, const Schedule& s);

/// Length of the longest suffix of `s` whose vertices are pairwise nonadjacent.
int tail_width(const Pattern& p, const Schedule& s);

/// Largest tail_width among connectivity-respecting orders. This is the k the
/// second filter demands; it equals the independence number whenever some
/// maximum independent set has a connected complement.
int schedulable_tail_width(const Pattern& p);

/// Orders passing both filters, lexicographic.
std::vector<Schedule> generate_schedules(const Pattern& p);

/// Breadth-first order from vertex 0 (always connectivity-respecting).
Schedule bfs_schedule(const Pattern& p);

struct LoopStep {
  int vertex = 0;
  /// Earlier loop positions whose data vertices' neighborhoods are intersected.
  /// Empty only for loop 0 (all data vertices).
  std::vector<int> parents;
  /// Restrictions whose later-scheduled endpoint is bound here.
  std::vector<Restriction> checks;
};

struct LoopPlan {
  std::vector<LoopStep> loops;

  /// One line per loop: "L<i>: v=<vertex> cand=∩{<positions>} res=[...]".
  std::string to_string() const;
};

LoopPlan build_loop_plan(const Pattern& p, const Schedule& s, const RestrictionSet& rs);

/// Schedule + restriction set + derived loop plan.
struct Configuration {
  Schedule schedule;
  RestrictionSet restrictions;
  LoopPlan plan;
  std::optional<double> predicted_cost;

  /// Canonical order used for deterministic tie-breaking.
  friend bool canonical_less(const Configuration& a, const Configuration& b) {
    if (a.schedule != b.schedule) return a.schedule < b.schedule;
    return a.restrictions < b.restrictions;
  }
};

Configuration make_configuration(const Pattern& p, const Schedule& s, const RestrictionSet& rs);

/// generate_schedules x res_set_generation, schedule-major.
std::vector<Configuration> enumerate_configurations(const Pattern& p, const RestrictionGenOptions& opts = {});
std::vector<Configuration> enumerate_configurations(const Pattern& p, const std::vector<Schedule>& schedules,
                                                    const std::vector<RestrictionSet>& sets);

}  // namespace gpm
