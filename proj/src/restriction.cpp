#include "gpm/restriction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "gpm/errors.hpp"
#include "gpm/matcher.hpp"
#include "gpm/schedule.hpp"

namespace gpm {

RestrictionSet::RestrictionSet(std::initializer_list<Restriction> rs) {
  for (auto r : rs) insert(r);
}

RestrictionSet::RestrictionSet(const std::vector<Restriction>& rs) {
  for (auto r : rs) insert(r);
}

void RestrictionSet::insert(Restriction r) {
  if (r.greater == r.lesser || r.greater < 0 || r.lesser < 0 || r.greater >= kMaxPatternSize ||
      r.lesser >= kMaxPatternSize) {
    throw std::invalid_argument("Restriction: endpoints must be distinct pattern vertices");
  }
  mask_ |= std::uint64_t{1} << bit(r);
}

std::size_t RestrictionSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Restriction> RestrictionSet::items() const {
  std::vector<Restriction> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) {
    int b = std::countr_zero(m);
    out.push_back({b / kMaxPatternSize, b % kMaxPatternSize});
  }
  return out;
}

namespace {

// Kahn's algorithm on an 8-vertex digraph given as out-neighbor masks.
bool dag(const std::array<VertexMask, kMaxPatternSize>& out) {
  VertexMask remaining = 0xFF;
  while (remaining) {
    VertexMask sources = 0;
    for (int v = 0; v < kMaxPatternSize; ++v) {
      if (!((remaining >> v) & 1U)) continue;
      bool has_incoming = false;
      for (int u = 0; u < kMaxPatternSize && !has_incoming; ++u) {
        has_incoming = ((remaining >> u) & 1U) && ((out[u] >> v) & 1U);
      }
      if (!has_incoming) sources |= static_cast<VertexMask>(1U << v);
    }
    if (!sources) return false;
    remaining &= static_cast<VertexMask>(~sources);
  }
  return true;
}

}  // namespace

bool RestrictionSet::acyclic() const {
  std::array<VertexMask, kMaxPatternSize> out{};
  for (auto r : items()) out[r.greater] |= static_cast<VertexMask>(1U << r.lesser);
  return dag(out);
}

std::string RestrictionSet::to_string() const {
  if (empty()) return "none";
  std::string s;
  for (auto r : items()) {
    if (!s.empty()) s += ", ";
    s += "v" + std::to_string(r.greater) + " > v" + std::to_string(r.lesser);
  }
  return s;
}

std::strong_ordering operator<=>(const RestrictionSet& a, const RestrictionSet& b) {
  auto ia = a.items();
  auto ib = b.items();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

bool no_conflict(const Permutation& perm, const RestrictionSet& rs) {
  std::array<VertexMask, kMaxPatternSize> out{};
  for (auto r : rs.items()) {
    out[r.greater] |= static_cast<VertexMask>(1U << r.lesser);
    out[perm[r.greater]] |= static_cast<VertexMask>(1U << perm[r.lesser]);
  }
  return dag(out);
}

PermutationGroup surviving(const PermutationGroup& group, const RestrictionSet& rs) {
  PermutationGroup out;
  for (const auto& p : group) {
    if (no_conflict(p, rs)) out.push_back(p);
  }
  return out;
}

Count count_linear_extensions(int n, const RestrictionSet& rs) {
  // below[v]: vertices that must take a smaller rank than v.
  std::array<VertexMask, kMaxPatternSize> below{};
  for (auto r : rs.items()) {
    if (r.greater >= n || r.lesser >= n) throw std::invalid_argument("restriction outside pattern");
    below[r.greater] |= static_cast<VertexMask>(1U << r.lesser);
  }
  // ways[mask]: orderings of the vertices in `mask` onto the lowest ranks.
  std::vector<Count> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (!ways[mask]) continue;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) continue;
      if ((below[v] & mask) != below[v]) continue;
      ways[mask | (1U << v)] += ways[mask];
    }
  }
  return ways.back();
}

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return graph_from_edges(static_cast<std::size_t>(n), edges);
}

Count count_on(const Graph& g, const Pattern& p, const Schedule& s, const RestrictionSet& rs) {
  Configuration cfg{s, rs, build_loop_plan(p, s, rs), std::nullopt};
  return match(g, p, cfg, MatchOptions{}).count;
}

class Generator {
 public:
  Generator(const Pattern& p, const RestrictionGenOptions& opts)
      : pattern_(p), opts_(opts), kn_(complete_graph(p.size())), schedule_(bfs_schedule(p)) {
    without_ = count_on(kn_, pattern_, schedule_, {});
  }

  std::vector<RestrictionSet> run(const PermutationGroup& group) {
    aut_size_ = group.size();
    generate(group, {});
    return found_;
  }

 private:
  bool full() const { return found_.size() >= opts_.max_sets; }

  bool valid(const RestrictionSet& rs) const {
    return without_ % aut_size_ == 0 && count_on(kn_, pattern_, schedule_, rs) == without_ / aut_size_;
  }

  void generate(const PermutationGroup& group, const RestrictionSet& rs) {
    if (full() || !visited_.insert(rs.mask()).second) return;
    if (group.size() == 1) {
      if (valid(rs)) found_.push_back(rs);
      return;
    }
    // One branch per distinct oriented 2-cycle pair, in discovery order.
    std::vector<Restriction> branches;
    for (const auto& perm : group) {
      for (int v = 0; v < perm.size(); ++v) {
        int w = perm[v];
        if (w == v || perm[w] != v) continue;
        Restriction r{v, w};
        if (std::find(branches.begin(), branches.end(), r) == branches.end()) branches.push_back(r);
      }
    }
    for (auto r : branches) {
      if (full()) return;
      RestrictionSet next = rs;
      next.insert(r);
      if (next == rs) continue;
      auto remaining = surviving(group, next);
      // Empty means `next` itself is cyclic (identity eliminated).
      if (remaining.empty()) continue;
      generate(remaining, next);
    }
  }

  const Pattern& pattern_;
  RestrictionGenOptions opts_;
  Graph kn_;
  Schedule schedule_;
  Count without_ = 0;
  std::size_t aut_size_ = 1;
  std::unordered_set<std::uint64_t> visited_;
  std::vector<RestrictionSet> found_;
};

}  // namespace

bool validate(const Pattern& p, const RestrictionSet& rs) {
  const Graph kn = complete_graph(p.size());
  const Schedule s = bfs_schedule(p);
  const Count without = count_on(kn, p, s, {});
  const Count aut = automorphisms(p).size();
  if (without % aut != 0) return false;
  return count_on(kn, p, s, rs) == without / aut;
}

std::vector<RestrictionSet> res_set_generation(const Pattern& p, const RestrictionGenOptions& opts) {
  const auto group = automorphisms(p);
  if (group.size() == 1) return {RestrictionSet{}};
  Generator gen(p, opts);
  auto sets = gen.run(group);
  if (sets.empty()) {
    throw InternalError("restriction generation failed: no complete restriction set for " + p.to_string());
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace gpm
