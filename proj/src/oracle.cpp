#include "gpm/oracle.hpp"

#include <array>
#include <functional>
#include <string>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

Count count_mappings(std::size_t target_size, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                     const Pattern& p) {
  const int n = p.size();
  std::array<std::size_t, kMaxPatternSize> image{};
  std::vector<bool> taken(target_size, false);
  Count total = 0;
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      ++total;
      return;
    }
    for (std::size_t x = 0; x < target_size; ++x) {
      if (taken[x]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (p.adjacent(u, v) && !adjacent(image[static_cast<std::size_t>(u)], x)) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = x;
      taken[x] = true;
      extend(v + 1);
      taken[x] = false;
    }
  };
  extend(0);
  return total;
}

}  // namespace

Count count_injective_mappings(const Graph& g, const Pattern& p) {
  return count_mappings(
      g.vertex_count(),
      [&](std::size_t a, std::size_t b) { return g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)); }, p);
}

Count count_self_mappings(const Pattern& p) {
  return count_mappings(
      static_cast<std::size_t>(p.size()),
      [&](std::size_t a, std::size_t b) { return p.adjacent(static_cast<int>(a), static_cast<int>(b)); }, p);
}

Count oracle_count(const Graph& g, const Pattern& p) {
  if (g.vertex_count() > kOracleMaxVertices) {
    throw UsageError("oracle enumerates all injective mappings and is limited to " +
                     std::to_string(kOracleMaxVertices) + " vertices (graph has " +
                     std::to_string(g.vertex_count()) + "); use `count` instead");
  }
  const Count maps = count_injective_mappings(g, p);
  const Count aut = count_self_mappings(p);
  if (maps % aut != 0) throw InternalError("mapping count is not a multiple of the automorphism count");
  return maps / aut;
}

}  // namespace gpm
