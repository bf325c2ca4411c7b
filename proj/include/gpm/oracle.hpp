#pragma once

#include <cstddef>

#include "gpm/graph.hpp"
#include "gpm/pattern.hpp"

namespace gpm {

/// Largest data graph the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 64;

/// Injective maps from pattern vertices to data vertices that send every
/// pattern edge to a data edge. Plain backtracking in pattern-index order with
/// adjacency lookups; shares no code with the matcher.
Count count_injective_mappings(const Graph& g, const Pattern& p);

/// Same count with the pattern itself as the target (its automorphism count).
Count count_self_mappings(const Pattern& p);

/// Distinct embeddings: injective mappings / |Aut|. Throws UsageError when the
/// graph exceeds kOracleMaxVertices.
Count oracle_count(const Graph& g, const Pattern& p);

}  // namespace gpm
