#include "gpm/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpm {

namespace {

using Edge = std::pair<Vertex, Vertex>;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return graph_from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0 || n <= m) throw std::invalid_argument("preferential attachment needs 0 < m < n");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // Every edge endpoint appears once here; uniform picks are degree-weighted.
  std::vector<Vertex> endpoints;
  for (std::size_t u = 0; u <= m; ++u) {
    for (std::size_t v = u + 1; v <= m; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      endpoints.push_back(static_cast<Vertex>(u));
      endpoints.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Vertex> targets;
  for (std::size_t v = m + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      Vertex t = endpoints[rng() % endpoints.size()];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.emplace_back(t, static_cast<Vertex>(v));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<Vertex>(v));
    }
  }
  return graph_from_edges(n, edges);
}

Graph powerlaw_cluster(std::size_t n, std::size_t m, double triad_p, std::uint64_t seed) {
  if (m == 0 || n <= m) throw std::invalid_argument("preferential attachment needs 0 < m < n");
  if (triad_p < 0 || triad_p > 1) throw std::invalid_argument("triad probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> endpoints;
  std::vector<std::vector<Vertex>> adj(n);
  auto link = [&](Vertex u, Vertex v) {
    edges.emplace_back(u, v);
    endpoints.push_back(u);
    endpoints.push_back(v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (std::size_t u = 0; u <= m; ++u) {
    for (std::size_t v = u + 1; v <= m; ++v) link(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::vector<Vertex> targets;
  for (std::size_t v = m + 1; v < n; ++v) {
    targets.clear();
    auto fresh = [&](Vertex t) { return std::find(targets.begin(), targets.end(), t) == targets.end(); };
    Vertex last = endpoints[rng() % endpoints.size()];
    targets.push_back(last);
    while (targets.size() < m) {
      // Triad step: close a triangle through a neighbor of the previous pick.
      if (unit(rng) < triad_p) {
        const auto& nb = adj[last];
        Vertex t = nb[rng() % nb.size()];
        if (fresh(t)) {
          targets.push_back(t);
          continue;
        }
      }
      Vertex t = endpoints[rng() % endpoints.size()];
      if (fresh(t)) {
        targets.push_back(t);
        last = t;
      }
    }
    for (Vertex t : targets) link(t, static_cast<Vertex>(v));
  }
  return graph_from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return graph_from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>((u + 1) % n));
  return graph_from_edges(n, edges);
}

}  // namespace gpm
