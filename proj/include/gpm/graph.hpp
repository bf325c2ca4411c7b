#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace gpm {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

/// Strictly ascending set of data-graph vertices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws std::invalid_argument unless `elems` is strictly ascending.
  explicit VertexSet(std::vector<Vertex> elems);

  std::span<const Vertex> elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> elems_;
};

/// Linear merge of two ascending ranges. `out` is overwritten.
void intersect_into(std::span<const Vertex> a, std::span<const Vertex> b, std::vector<Vertex>& out);
std::size_t intersect_count(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);

/// Immutable undirected simple graph in CSR form. Neighbor slices are strictly
/// ascending and the adjacency is symmetric.
class Graph {
 public:
  Graph() = default;

  /// Takes ownership of a CSR; validates invariants and counts triangles.
  /// `original_ids` may be empty (identity mapping).
  Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors,
        std::vector<std::uint64_t> original_ids = {});

  /// Used by the cache loader, which already knows the triangle count.
  Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors, Count triangle_count,
        std::vector<std::uint64_t> original_ids);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  Count triangle_count() const { return triangle_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const Vertex> adjacency() const { return neighbors_; }

  /// Id as it appeared in the input edge list.
  std::uint64_t original_id(Vertex v) const { return original_ids_.empty() ? v : original_ids_[v]; }

  /// Compares the CSR arrays and the triangle count (not the id map).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_invariants() const;

  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::uint64_t> original_ids_;
  Count triangle_count_ = 0;
};

/// Builds a graph over vertices 0..n-1. Self-loops dropped; duplicates and
/// reversed duplicates merged.
Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

struct LoadDiagnostics {
  std::size_t lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Parses "u v" lines ('#' comments). Ids are compacted to 0..V-1 in order of
/// first appearance; the original ids are kept on the graph.
Graph load_edge_list(std::istream& in, LoadDiagnostics* diag = nullptr);
Graph load_edge_list(std::string_view text, LoadDiagnostics* diag = nullptr);
Graph load_edge_list_file(const std::filesystem::path& path, LoadDiagnostics* diag = nullptr);

Count count_triangles(const Graph& g);

// Binary cache: "GPMC", u32 version, u64 V, u64 E, u64 triangles,
// u64 offsets[V+1], u32 neighbors[2E]; little-endian.
void save_cache(const Graph& g, const std::filesystem::path& path);
Graph load_cache(const std::filesystem::path& path);
bool is_cache_file(const std::filesystem::path& path);

}  // namespace gpm
