#pragma once

#include <cstddef>
#include <cstdint>

#include "gpm/graph.hpp"

namespace gpm {

/// G(n, p): each of the C(n,2) pairs is an edge independently with
/// probability p. Seeded mt19937_64 with a fixed bit-to-double mapping, so the
/// graph depends only on (n, p, seed).
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment: starts from a clique on m+1 vertices, then each
/// new vertex links to m distinct existing vertices chosen proportionally to
/// degree. Yields about n*m edges with a power-law degree tail.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Preferential attachment with triad formation: after each degree-weighted
/// pick, with probability `triad_p` the next link goes to a neighbor of that
/// pick instead, closing a triangle. Power-law degrees with tunable
/// clustering.
Graph powerlaw_cluster(std::size_t n, std::size_t m, double triad_p, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace gpm
