#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpm/graph.hpp"
#include "gpm/pattern.hpp"
#include "gpm/schedule.hpp"

namespace gpm {

/// Data vertices (compact ids) in schedule-position order.
using Embedding = std::vector<Vertex>;

enum class MatchMode { count, list };

struct MatchOptions {
  MatchMode mode = MatchMode::count;
  bool iep = false;
  int workers = 1;
  /// Outer loops packed into one task; 0 picks 2 for patterns with n >= 4,
  /// else 1.
  int prefix_depth = 0;
  /// Abandon the search once this passes; the result is then partial and
  /// flagged timed_out.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct MatchStats {
  std::uint64_t tasks = 0;
  std::uint64_t intersections = 0;
  double wall_seconds = 0;
  int iep_width = 0;
  Count correction = 1;
  bool timed_out = false;
};

struct MatchResult {
  Count count = 0;
  std::optional<std::vector<Embedding>> embeddings;
  MatchStats stats;
};

/// Counts (or lists) embeddings of `p` in `g` following `config`. With a
/// complete restriction set each automorphism class is counted once.
/// Throws UsageError for IEP with listing or when the schedule's tail cannot
/// be replaced by IEP.
MatchResult match(const Graph& g, const Pattern& p, const Configuration& config, const MatchOptions& opts = {});

int default_prefix_depth(const Pattern& p);

}  // namespace gpm
