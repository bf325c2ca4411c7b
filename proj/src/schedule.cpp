#include "gpm/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpm {

int Schedule::position_of(int v) const {
  auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end()) throw std::out_of_range("vertex not in schedule");
  return static_cast<int>(it - order.begin());
}

bool satisfies_connectivity(const Pattern& p, const Schedule& s) {
  VertexMask seen = 0;
  for (int i = 0; i < s.size(); ++i) {
    int v = s.order[static_cast<std::size_t>(i)];
    if (i > 0 && !(p.neighbors(v) & seen)) return false;
    seen |= static_cast<VertexMask>(1U << v);
  }
  return true;
}

int tail_width(const Pattern& p, const Schedule& s) {
  VertexMask tail = 0;
  int width = 0;
  for (int i = s.size() - 1; i >= 0; --i) {
    int v = s.order[static_cast<std::size_t>(i)];
    if (p.neighbors(v) & tail) break;
    tail |= static_cast<VertexMask>(1U << v);
    ++width;
  }
  return width;
}

namespace {

template <class Fn>
void for_each_order(int n, Fn&& fn) {
  Schedule s;
  s.order.resize(static_cast<std::size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 0);
  do {
    fn(s);
  } while (std::next_permutation(s.order.begin(), s.order.end()));
}

}  // namespace

int schedulable_tail_width(const Pattern& p) {
  int best = 0;
  for_each_order(p.size(), [&](const Schedule& s) {
    if (satisfies_connectivity(p, s)) best = std::max(best, tail_width(p, s));
  });
  return best;
}

std::vector<Schedule> generate_schedules(const Pattern& p) {
  const int k = schedulable_tail_width(p);
  std::vector<Schedule> out;
  for_each_order(p.size(), [&](const Schedule& s) {
    if (satisfies_connectivity(p, s) && tail_width(p, s) >= k) out.push_back(s);
  });
  return out;
}

Schedule bfs_schedule(const Pattern& p) {
  Schedule s;
  VertexMask seen = 1;
  s.order.push_back(0);
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    int u = s.order[head];
    for (int v = 0; v < p.size(); ++v) {
      if (p.adjacent(u, v) && !((seen >> v) & 1U)) {
        seen |= static_cast<VertexMask>(1U << v);
        s.order.push_back(v);
      }
    }
  }
  return s;
}

LoopPlan build_loop_plan(const Pattern& p, const Schedule& s, const RestrictionSet& rs) {
  if (s.size() != p.size()) throw std::invalid_argument("schedule size does not match pattern");
  LoopPlan plan;
  plan.loops.resize(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    auto& step = plan.loops[static_cast<std::size_t>(i)];
    step.vertex = s.order[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      if (p.adjacent(step.vertex, s.order[static_cast<std::size_t>(j)])) step.parents.push_back(j);
    }
  }
  for (auto r : rs.items()) {
    int at = std::max(s.position_of(r.greater), s.position_of(r.lesser));
    plan.loops[static_cast<std::size_t>(at)].checks.push_back(r);
  }
  return plan;
}

std::string LoopPlan::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto& step = loops[i];
    out += "L" + std::to_string(i) + ": v=" + std::to_string(step.vertex) + " cand=∩{";
    for (std::size_t j = 0; j < step.parents.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(step.parents[j]);
    }
    out += "} res=[";
    for (std::size_t j = 0; j < step.checks.size(); ++j) {
      if (j) out += ", ";
      out += "v" + std::to_string(step.checks[j].greater) + " > v" + std::to_string(step.checks[j].lesser);
    }
    out += "]\n";
  }
  return out;
}

Configuration make_configuration(const Pattern& p, const Schedule& s, const RestrictionSet& rs) {
  return Configuration{s, rs, build_loop_plan(p, s, rs), std::nullopt};
}

std::vector<Configuration> enumerate_configurations(const Pattern& p, const std::vector<Schedule>& schedules,
                                                    const std::vector<RestrictionSet>& sets) {
  std::vector<Configuration> out;
  out.reserve(schedules.size() * sets.size());
  for (const auto& s : schedules) {
    for (const auto& rs : sets) out.push_back(make_configuration(p, s, rs));
  }
  return out;
}

std::vector<Configuration> enumerate_configurations(const Pattern& p, const RestrictionGenOptions& opts) {
  return enumerate_configurations(p, generate_schedules(p), res_set_generation(p, opts));
}

}  // namespace gpm
