#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpm/detail/executor.hpp"

namespace gpm::detail {

struct ParallelOutcome {
  Count count = 0;
  std::int64_t iep_raw = 0;
  std::uint64_t tasks = 0;
  std::uint64_t intersections = 0;
  bool timed_out = false;
  std::vector<Vertex> listing;
};

/// Producer enumerates prefixes of length `depth` into per-worker deques;
/// workers drain their own deque from the back and steal from the front of
/// the others.
ParallelOutcome execute_parallel(const Graph& g, const CompiledPlan& plan, int workers, int depth, bool listing,
                                 std::optional<std::chrono::steady_clock::time_point> deadline);

}  // namespace gpm::detail
