#include "gpm/matcher.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "gpm/detail/executor.hpp"
#include "gpm/detail/parallel_runtime.hpp"
#include "gpm/errors.hpp"
#include "gpm/iep.hpp"

namespace gpm {
namespace detail {

CompiledPlan compile_plan(const Pattern& p, const Configuration& config, int iep_width) {
  const auto& loops = config.plan.loops;
  if (static_cast<int>(loops.size()) != p.size()) throw std::invalid_argument("loop plan does not match pattern");
  CompiledPlan plan;
  plan.n = p.size();
  plan.iep_width = iep_width;
  for (int i = 0; i < plan.n; ++i) {
    const auto& step = loops[static_cast<std::size_t>(i)];
    auto& loop = plan.loops[static_cast<std::size_t>(i)];
    loop.vertex = step.vertex;
    if (i > 0 && step.parents.empty()) throw std::invalid_argument("loop plan has a loop without parents");
    for (int parent : step.parents) loop.parents[static_cast<std::size_t>(loop.parent_count++)] = static_cast<std::uint8_t>(parent);
    for (auto r : step.checks) {
      if (r.greater == step.vertex) {
        loop.lower[static_cast<std::size_t>(loop.lower_count++)] =
            static_cast<std::uint8_t>(config.schedule.position_of(r.lesser));
      } else {
        loop.upper[static_cast<std::size_t>(loop.upper_count++)] =
            static_cast<std::uint8_t>(config.schedule.position_of(r.greater));
      }
    }
    if (i > 0) plan.materialize[static_cast<std::size_t>(step.parents.back())].push_back(i);
  }
  if (iep_width > 0) plan.formula = IepFormula(iep_width);
  return plan;
}

Executor::Executor(const Graph& g, const CompiledPlan& plan, bool listing)
    : g_(g), plan_(plan), listing_enabled_(listing) {
  if (plan_.iep_width > 0) block_sizes_.assign(std::size_t{1} << plan_.iep_width, 0);
}

bool Executor::used(Vertex v, int upto) const {
  for (int j = 0; j < upto; ++j) {
    if (assign_[static_cast<std::size_t>(j)] == v) return true;
  }
  return false;
}

bool Executor::poll_deadline() {
  if (timed_out_) return true;
  if (!deadline_ || (++poll_counter_ & 63U) != 0) return false;
  if (std::chrono::steady_clock::now() >= *deadline_) timed_out_ = true;
  return timed_out_;
}

void Executor::bind(int pos, Vertex v) {
  assign_[static_cast<std::size_t>(pos)] = v;
  for (int i : plan_.materialize[static_cast<std::size_t>(pos)]) {
    const auto& loop = plan_.loops[static_cast<std::size_t>(i)];
    if (loop.parent_count == 1) {
      cand_[static_cast<std::size_t>(i)] = g_.neighbors(v);
      continue;
    }
    auto& buf = buffers_[static_cast<std::size_t>(i)];
    intersect_into(g_.neighbors(assign_[loop.parents[0]]), g_.neighbors(assign_[loop.parents[1]]), buf);
    ++intersections_;
    for (int k = 2; k < loop.parent_count; ++k) {
      intersect_into(buf, g_.neighbors(assign_[loop.parents[static_cast<std::size_t>(k)]]), scratch_);
      buf.swap(scratch_);
      ++intersections_;
    }
    cand_[static_cast<std::size_t>(i)] = buf;
  }
}

void Executor::run_all() {
  const auto n = static_cast<Vertex>(g_.vertex_count());
  for (Vertex v = 0; v < n; ++v) {
    if (poll_deadline()) return;
    bind(0, v);
    if (stop_depth_ == 1) {
      (*sink_)(std::span<const Vertex>(assign_.data(), 1));
      continue;
    }
    descend(1);
  }
}

void Executor::enumerate_prefixes(int depth, const PrefixSink& sink) {
  stop_depth_ = depth;
  sink_ = &sink;
  run_all();
  stop_depth_ = -1;
  sink_ = nullptr;
}

void Executor::run_prefix(std::span<const Vertex> prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) bind(static_cast<int>(i), prefix[i]);
  descend(static_cast<int>(prefix.size()));
}

void Executor::descend(int pos) {
  if (plan_.iep_width > 0 && pos == plan_.n - plan_.iep_width) {
    iep_tail(pos);
    return;
  }
  const auto& loop = plan_.loops[static_cast<std::size_t>(pos)];
  const auto c = cand_[static_cast<std::size_t>(pos)];
  auto lo = c.begin();
  auto hi = c.end();
  if (loop.lower_count) {
    Vertex bound = 0;
    for (int j = 0; j < loop.lower_count; ++j) bound = std::max(bound, assign_[loop.lower[static_cast<std::size_t>(j)]]);
    lo = std::upper_bound(lo, hi, bound);
  }
  Vertex limit = std::numeric_limits<Vertex>::max();
  for (int j = 0; j < loop.upper_count; ++j) limit = std::min(limit, assign_[loop.upper[static_cast<std::size_t>(j)]]);

  const bool last = pos == plan_.n - 1;
  if (last && !listing_enabled_) {
    if (loop.upper_count) hi = std::lower_bound(lo, hi, limit);
    if (lo >= hi) return;
    Count hits = static_cast<Count>(hi - lo);
    for (int j = 0; j < pos; ++j) {
      Vertex b = assign_[static_cast<std::size_t>(j)];
      if (b >= *lo && b <= *(hi - 1) && std::binary_search(lo, hi, b)) --hits;
    }
    count_ += hits;
    return;
  }

  const bool emit_prefix = pos + 1 == stop_depth_;
  for (auto it = lo; it != hi; ++it) {
    const Vertex v = *it;
    if (v >= limit) break;
    if (used(v, pos)) continue;
    if (pos <= 2 && poll_deadline()) return;
    bind(pos, v);
    if (emit_prefix) {
      (*sink_)(std::span<const Vertex>(assign_.data(), static_cast<std::size_t>(pos + 1)));
    } else if (last) {
      ++count_;
      listing_.insert(listing_.end(), assign_.begin(), assign_.begin() + plan_.n);
    } else {
      descend(pos + 1);
    }
    if (timed_out_) return;
  }
}

void Executor::iep_tail(int pos) {
  const int k = plan_.iep_width;
  std::array<SetView, kMaxPatternSize> views{};
  for (int t = 0; t < k; ++t) {
    auto& set = tail_sets_[static_cast<std::size_t>(t)];
    set.clear();
    for (Vertex v : cand_[static_cast<std::size_t>(pos + t)]) {
      if (!used(v, pos)) set.push_back(v);
    }
    views[static_cast<std::size_t>(t)] = set;
  }
  for (auto mask : plan_.formula.block_masks()) {
    int first = std::countr_zero(static_cast<unsigned>(mask));
    if (std::popcount(static_cast<unsigned>(mask)) == 1) {
      block_sizes_[mask] = static_cast<std::int64_t>(views[static_cast<std::size_t>(first)].size());
      continue;
    }
    int second = std::countr_zero(static_cast<unsigned>(mask) & (static_cast<unsigned>(mask) - 1U));
    unsigned rest = static_cast<unsigned>(mask) & ~(1U << first) & ~(1U << second);
    ++intersections_;
    if (!rest) {
      block_sizes_[mask] = static_cast<std::int64_t>(
          intersect_count(views[static_cast<std::size_t>(first)], views[static_cast<std::size_t>(second)]));
      continue;
    }
    intersect_into(views[static_cast<std::size_t>(first)], views[static_cast<std::size_t>(second)], scratch_);
    std::vector<Vertex> acc = scratch_;
    for (; rest; rest &= rest - 1) {
      intersect_into(acc, views[static_cast<std::size_t>(std::countr_zero(rest))], scratch_);
      acc.swap(scratch_);
      ++intersections_;
    }
    block_sizes_[mask] = static_cast<std::int64_t>(acc.size());
  }
  std::int64_t term = plan_.formula.evaluate(block_sizes_);
  if (term < 0) throw InternalError("inclusion-exclusion produced a negative count");
  if (__builtin_add_overflow(iep_raw_, term, &iep_raw_)) throw OverflowError("IEP total overflows 64-bit count");
}

}  // namespace detail

int default_prefix_depth(const Pattern& p) { return p.size() >= 4 ? 2 : 1; }

MatchResult match(const Graph& g, const Pattern& p, const Configuration& config, const MatchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.iep && opts.mode == MatchMode::list) throw UsageError("IEP counting cannot list embeddings");
  if (opts.workers < 1) throw UsageError("workers must be at least 1");

  MatchResult result;
  const bool listing = opts.mode == MatchMode::list;
  if (listing) result.embeddings.emplace();

  int width = 0;
  Count correction = 1;
  if (opts.iep) {
    if (tail_width(p, config.schedule) < 2) {
      throw UsageError("IEP needs at least 2 pairwise-nonadjacent vertices at the end of the schedule");
    }
    width = iep_eligible_width(p, config);
    if (width == 0) {
      throw UsageError("IEP correction is not exact for this restriction placement; pick another configuration");
    }
    correction = iep_correction_factor(p, config, width);
  }
  result.stats.iep_width = width;
  result.stats.correction = correction;

  if (static_cast<std::size_t>(p.size()) > g.vertex_count()) {
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  const auto plan = detail::compile_plan(p, config, width);
  std::int64_t raw = 0;
  std::vector<Vertex> flat;
  if (opts.workers == 1) {
    detail::Executor exec(g, plan, listing);
    exec.set_deadline(opts.deadline);
    exec.run_all();
    result.count = exec.count();
    raw = exec.iep_raw();
    result.stats.tasks = 1;
    result.stats.intersections = exec.intersections();
    result.stats.timed_out = exec.timed_out();
    if (listing) flat = exec.listing();
  } else {
    int depth = opts.prefix_depth > 0 ? opts.prefix_depth : default_prefix_depth(p);
    depth = std::clamp(depth, 1, p.size() - 1);
    if (width > 0) depth = std::min(depth, p.size() - width);
    auto out = detail::execute_parallel(g, plan, opts.workers, depth, listing, opts.deadline);
    result.count = out.count;
    raw = out.iep_raw;
    result.stats.tasks = out.tasks;
    result.stats.intersections = out.intersections;
    result.stats.timed_out = out.timed_out;
    flat = std::move(out.listing);
  }

  if (width > 0) {
    if (raw % static_cast<std::int64_t>(correction) != 0) {
      throw InternalError("IEP total " + std::to_string(raw) + " not divisible by correction factor " +
                          std::to_string(correction));
    }
    result.count = static_cast<Count>(raw) / correction;
  }
  if (listing) {
    const auto n = static_cast<std::size_t>(p.size());
    for (std::size_t i = 0; i + n <= flat.size(); i += n) {
      result.embeddings->emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                      flat.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
  }
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace gpm
