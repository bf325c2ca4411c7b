#pragma once

// Interpreter for a compiled loop plan. Shared by the sequential matcher and
// the task-parallel runtime; not part of the public API.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gpm/graph.hpp"
#include "gpm/iep.hpp"
#include "gpm/pattern.hpp"
#include "gpm/schedule.hpp"

namespace gpm::detail {

struct CompiledLoop {
  int vertex = 0;
  int parent_count = 0;
  std::array<std::uint8_t, kMaxPatternSize> parents{};
  /// Positions j with id(current) > id(assign[j]): seek past max.
  int lower_count = 0;
  std::array<std::uint8_t, kMaxPatternSize> lower{};
  /// Positions j with id(assign[j]) > id(current): stop at min.
  int upper_count = 0;
  std::array<std::uint8_t, kMaxPatternSize> upper{};
};

struct CompiledPlan {
  int n = 0;
  std::array<CompiledLoop, kMaxPatternSize> loops{};
  /// materialize[p]: loops whose candidate set is built right after position p
  /// is bound (p is their last parent).
  std::array<std::vector<int>, kMaxPatternSize> materialize{};
  /// Innermost loops replaced by inclusion-exclusion; 0 = enumerate all.
  int iep_width = 0;
  IepFormula formula;
};

CompiledPlan compile_plan(const Pattern& p, const Configuration& config, int iep_width);

class Executor {
 public:
  using PrefixSink = std::function<void(std::span<const Vertex>)>;

  Executor(const Graph& g, const CompiledPlan& plan, bool listing);

  /// Full search from loop 0.
  void run_all();
  /// Enumerates valid prefixes of length `depth` (restrictions and
  /// distinctness applied) and hands each to `sink` instead of descending.
  void enumerate_prefixes(int depth, const PrefixSink& sink);
  /// Completes the search below a prefix produced by enumerate_prefixes.
  void run_prefix(std::span<const Vertex> prefix);

  void set_deadline(std::optional<std::chrono::steady_clock::time_point> d) { deadline_ = d; }
  bool timed_out() const { return timed_out_; }

  Count count() const { return count_; }
  std::int64_t iep_raw() const { return iep_raw_; }
  std::uint64_t intersections() const { return intersections_; }
  /// Flat n-stride list of assignments (listing mode).
  const std::vector<Vertex>& listing() const { return listing_; }

 private:
  void bind(int pos, Vertex v);
  void descend(int pos);
  void iep_tail(int pos);
  bool used(Vertex v, int upto) const;
  bool poll_deadline();

  const Graph& g_;
  const CompiledPlan& plan_;
  bool listing_enabled_;
  std::array<Vertex, kMaxPatternSize> assign_{};
  std::array<std::span<const Vertex>, kMaxPatternSize> cand_{};
  std::array<std::vector<Vertex>, kMaxPatternSize> buffers_{};
  std::vector<Vertex> scratch_;
  std::array<std::vector<Vertex>, kMaxPatternSize> tail_sets_{};
  std::vector<std::int64_t> block_sizes_;

  int stop_depth_ = -1;
  const PrefixSink* sink_ = nullptr;

  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint32_t poll_counter_ = 0;
  bool timed_out_ = false;

  Count count_ = 0;
  std::int64_t iep_raw_ = 0;
  std::uint64_t intersections_ = 0;
  std::vector<Vertex> listing_;
};

}  // namespace gpm::detail
