#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpm {

inline constexpr int kMaxPatternSize = 8;

/// Bitmask over pattern vertices (bit v set = vertex v).
using VertexMask = std::uint8_t;

/// Small connected simple graph over at most eight vertices, stored as one
/// neighbor bitmask per vertex.
class Pattern {
 public:
  /// Validates size, symmetry, loops and connectivity; throws ParseError.
  static Pattern from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Pattern from_adjacency(std::string_view bits);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int independence_number() const { return independence_; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Canonical "n:u-v,..." form with u < v, lexicographic.
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern() = default;
  void finish();

  int n_ = 0;
  std::array<VertexMask, kMaxPatternSize> rows_{};
  int independence_ = 0;
};

/// Accepts "n:u-v,u-v,..." or an n*n string of '0'/'1'.
Pattern parse_pattern(std::string_view spec);

/// True iff no two vertices of `set` are adjacent.
bool is_independent(const Pattern& p, VertexMask set);

/// Bijection on 0..n-1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection of 0..n-1.
  explicit Permutation(const std::vector<int>& image);
  static Permutation identity(int n);

  int size() const { return n_; }
  int operator[](int v) const { return map_[v]; }
  bool is_identity() const;

  /// (a * b)[v] = a[b[v]]: apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxPatternSize> map_{};
};

/// All automorphisms of a pattern; element 0 is the identity, the rest in
/// lexicographic order of their image arrays.
using PermutationGroup = std::vector<Permutation>;

bool preserves_edges(const Pattern& p, const Permutation& perm);
PermutationGroup automorphisms(const Pattern& p);

using Cycle = std::vector<int>;

/// Each cycle starts at its minimum; cycles ordered by that minimum; fixed
/// points included.
std::vector<Cycle> disjoint_cycles(const Permutation& perm);

/// Writes cycle (a1 ... am) as the product (a1,am)(a1,am-1)...(a1,a2),
/// applied right to left.
std::vector<std::pair<int, int>> transpositions_of(const Cycle& cycle);

/// Pairs (v, perm[v]) with perm[perm[v]] == v and perm[v] != v, smaller first.
std::vector<std::pair<int, int>> find_2cycles(const Permutation& perm);

/// "(0)(1,3)(2)".
std::string to_cycle_string(const Permutation& perm);

}  // namespace gpm
