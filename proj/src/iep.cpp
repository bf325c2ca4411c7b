#include "gpm/iep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gpm/errors.hpp"
#include "gpm/restriction.hpp"

namespace gpm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("IEP term overflows 64-bit count");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("IEP sum overflows 64-bit count");
  return out;
}

struct UnionFind {
  std::array<int, kMaxPatternSize> parent{};
  explicit UnionFind(int k) { std::iota(parent.begin(), parent.begin() + k, 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::uint8_t> components(int k, std::span<const std::pair<int, int>> pairs) {
  UnionFind uf(k);
  for (auto [i, j] : pairs) uf.unite(i, j);
  std::vector<std::uint8_t> blocks;
  std::array<int, kMaxPatternSize> slot{};
  slot.fill(-1);
  for (int v = 0; v < k; ++v) {
    int root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(blocks.size());
      blocks.push_back(0);
    }
    blocks[static_cast<std::size_t>(slot[root])] |= static_cast<std::uint8_t>(1U << v);
  }
  return blocks;
}

std::vector<std::pair<int, int>> all_pairs(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::int64_t intersection_size(std::span<const SetView> sets, std::uint8_t block) {
  int first = std::countr_zero(block);
  if (std::popcount(block) == 1) return static_cast<std::int64_t>(sets[static_cast<std::size_t>(first)].size());
  std::vector<Vertex> acc(sets[static_cast<std::size_t>(first)].begin(), sets[static_cast<std::size_t>(first)].end());
  std::vector<Vertex> tmp;
  for (int i = first + 1; i < static_cast<int>(sets.size()); ++i) {
    if (!((block >> i) & 1U)) continue;
    intersect_into(acc, sets[static_cast<std::size_t>(i)], tmp);
    acc.swap(tmp);
  }
  return static_cast<std::int64_t>(acc.size());
}

}  // namespace

std::int64_t cardinality_of_event_intersection(std::span<const std::pair<int, int>> pairs,
                                               std::span<const SetView> sets) {
  const int k = static_cast<int>(sets.size());
  std::int64_t card = 1;
  for (auto block : components(k, pairs)) card = checked_mul(card, intersection_size(sets, block));
  return card;
}

std::int64_t iep_count_tail(std::span<const SetView> sets) {
  const int k = static_cast<int>(sets.size());
  const auto pairs = all_pairs(k);
  std::int64_t total = 0;
  std::vector<std::pair<int, int>> chosen;
  for (std::uint32_t subset = 0; subset < (1U << pairs.size()); ++subset) {
    chosen.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((subset >> b) & 1U) chosen.push_back(pairs[b]);
    }
    std::int64_t term = cardinality_of_event_intersection(chosen, sets);
    total = checked_add(total, (std::popcount(subset) % 2) ? -term : term);
  }
  if (total < 0) throw InternalError("inclusion-exclusion produced a negative count");
  return total;
}

IepFormula::IepFormula(int k) : k_(k) {
  if (k < 1 || k > kMaxPatternSize - 1) throw std::invalid_argument("IepFormula: k out of range");
  const auto pairs = all_pairs(k);
  std::map<std::vector<std::uint8_t>, std::int64_t> by_partition;
  std::vector<std::pair<int, int>> chosen;
  for (std::uint32_t subset = 0; subset < (1U << pairs.size()); ++subset) {
    chosen.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((subset >> b) & 1U) chosen.push_back(pairs[b]);
    }
    by_partition[components(k, chosen)] += (std::popcount(subset) % 2) ? -1 : 1;
  }
  for (auto& [blocks, coef] : by_partition) {
    if (coef == 0) continue;
    terms_.push_back({coef, blocks});
    block_masks_.insert(block_masks_.end(), blocks.begin(), blocks.end());
  }
  std::sort(block_masks_.begin(), block_masks_.end());
  block_masks_.erase(std::unique(block_masks_.begin(), block_masks_.end()), block_masks_.end());
}

std::int64_t IepFormula::evaluate(std::span<const std::int64_t> block_sizes) const {
  std::int64_t total = 0;
  for (const auto& term : terms_) {
    std::int64_t prod = term.coefficient;
    for (auto b : term.blocks) {
      prod = checked_mul(prod, block_sizes[b]);
      if (prod == 0) break;
    }
    total = checked_add(total, prod);
  }
  return total;
}

RestrictionSet outer_restrictions(const Configuration& config, int k) {
  RestrictionSet out;
  const std::size_t outer = config.plan.loops.size() - static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < outer; ++i) {
    for (auto r : config.plan.loops[i].checks) out.insert(r);
  }
  return out;
}

Count iep_correction_factor(const Pattern& p, const Configuration& config, int k) {
  const auto remaining = outer_restrictions(config, k);
  Count x = 0;
  for (const auto& perm : automorphisms(p)) {
    if (no_conflict(perm, remaining)) ++x;
  }
  return x;
}

bool iep_correction_is_exact(const Pattern& p, const Configuration& config, int k, Count x) {
  const int n = p.size();
  const auto remaining = outer_restrictions(config, k).items();
  const auto group = automorphisms(p);

  // Orderings as rank vectors; rank[v] = relative magnitude of v's data id.
  auto encode = [n](const std::array<int, kMaxPatternSize>& rank) {
    std::uint32_t code = 0;
    for (int v = 0; v < n; ++v) code = (code << 3) | static_cast<std::uint32_t>(rank[v]);
    return code;
  };
  auto satisfies = [&](const std::array<int, kMaxPatternSize>& rank) {
    return std::all_of(remaining.begin(), remaining.end(),
                       [&](Restriction r) { return rank[r.greater] > rank[r.lesser]; });
  };

  std::vector<bool> seen(std::size_t{1} << (3 * n), false);
  std::array<int, kMaxPatternSize> rank{};
  std::iota(rank.begin(), rank.begin() + n, 0);
  do {
    if (seen[encode(rank)]) continue;
    Count hits = 0;
    for (const auto& sigma : group) {
      // The automorphic embedding e∘σ gives vertex v the rank of σ(v).
      std::array<int, kMaxPatternSize> image{};
      for (int v = 0; v < n; ++v) image[v] = rank[sigma[v]];
      seen[encode(image)] = true;
      if (satisfies(image)) ++hits;
    }
    if (hits != x) return false;
  } while (std::next_permutation(rank.begin(), rank.begin() + n));
  return true;
}

double estimate_iep_cost(const GraphStats& stats, const Pattern& p, const Configuration& config, int k) {
  const auto& loops = config.plan.loops;
  const int n = static_cast<int>(loops.size());
  const int outer = n - k;
  if (k < 2 || outer < 1) throw std::invalid_argument("IEP tail width out of range");

  // Tail loops check nothing once their enumeration is replaced.
  LoopPlan trimmed = config.plan;
  for (int i = outer; i < n; ++i) trimmed.loops[static_cast<std::size_t>(i)].checks.clear();
  const auto f = compute_filter_fractions(p, trimmed);
  const auto base = estimate_cost(stats, p, config);

  double tail = 0;
  std::array<double, kMaxPatternSize> size{};
  for (int t = 0; t < k; ++t) {
    size[static_cast<std::size_t>(t)] = base.l[static_cast<std::size_t>(outer + t)];
    tail += size[static_cast<std::size_t>(t)];
  }
  for (auto mask : IepFormula(k).block_masks()) {
    if (std::popcount(mask) < 2) continue;
    for (int t = 0; t < k; ++t) {
      if ((mask >> t) & 1U) tail += size[static_cast<std::size_t>(t)];
    }
  }

  double cost = tail;
  for (int i = outer - 1; i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    cost = base.l[u] * (1.0 - f[u].value()) * (base.c[u] + cost);
  }
  return cost;
}

int iep_eligible_width(const Pattern& p, const Configuration& config) {
  for (int k = tail_width(p, config.schedule); k >= 2; --k) {
    if (iep_correction_is_exact(p, config, k, iep_correction_factor(p, config, k))) return k;
  }
  return 0;
}

}  // namespace gpm
