#pragma once

#include "gpm/matcher.hpp"

namespace gpm {

/// Counting run on `workers` threads with tasks of `prefix_depth` outer loops.
/// The count equals the sequential one exactly.
MatchResult run_parallel(const Graph& g, const Pattern& p, const Configuration& config, int workers,
                         int prefix_depth, bool iep = false);

}  // namespace gpm
