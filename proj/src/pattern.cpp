#include "gpm/pattern.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

void check_size(int n) {
  if (n < 2 || n > kMaxPatternSize) {
    throw ParseError("pattern size must be in [2, " + std::to_string(kMaxPatternSize) + "], got " + std::to_string(n));
  }
}

bool connected(int n, const std::array<VertexMask, kMaxPatternSize>& rows) {
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= rows[v];
    }
    frontier = next & static_cast<VertexMask>(~seen);
    seen |= next;
  }
  const unsigned full = (1U << n) - 1U;
  return seen == full;
}

}  // namespace

void Pattern::finish() {
  if (!connected(n_, rows_)) throw ParseError("pattern is not connected");
  independence_ = 0;
  for (unsigned s = 1; s < (1U << n_); ++s) {
    if (is_independent(*this, static_cast<VertexMask>(s))) {
      independence_ = std::max(independence_, std::popcount(s));
    }
  }
}

Pattern Pattern::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_size(n);
  Pattern p;
  p.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("pattern edge endpoint out of range");
    if (u == v) throw ParseError("pattern self-loop on vertex " + std::to_string(u));
    p.rows_[u] |= static_cast<VertexMask>(1U << v);
    p.rows_[v] |= static_cast<VertexMask>(1U << u);
  }
  p.finish();
  return p;
}

Pattern Pattern::from_adjacency(std::string_view bits) {
  int n = 0;
  while (n * n < static_cast<int>(bits.size())) ++n;
  if (n * n != static_cast<int>(bits.size())) throw ParseError("adjacency string length is not a perfect square");
  check_size(n);
  Pattern p;
  p.n_ = n;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      char c = bits[static_cast<std::size_t>(u * n + v)];
      if (c != '0' && c != '1') throw ParseError("adjacency string may only contain '0' and '1'");
      if (c != bits[static_cast<std::size_t>(v * n + u)]) throw ParseError("adjacency string is not symmetric");
      if (c == '1') {
        if (u == v) throw ParseError("pattern self-loop on vertex " + std::to_string(u));
        p.rows_[u] |= static_cast<VertexMask>(1U << v);
      }
    }
  }
  p.finish();
  return p;
}

std::vector<std::pair<int, int>> Pattern::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

int Pattern::edge_count() const {
  int deg = 0;
  for (int v = 0; v < n_; ++v) deg += std::popcount(rows_[v]);
  return deg / 2;
}

std::string Pattern::to_string() const {
  std::string s = std::to_string(n_) + ":";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

bool is_independent(const Pattern& p, VertexMask set) {
  for (int v = 0; v < p.size(); ++v) {
    if (((set >> v) & 1U) && (p.neighbors(v) & set)) return false;
  }
  return true;
}

namespace {

int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(tok) + "' in pattern spec");
  }
  return value;
}

}  // namespace

Pattern parse_pattern(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return Pattern::from_adjacency(spec);

  int n = parse_int(spec.substr(0, colon), "vertex count");
  check_size(n);
  std::vector<std::pair<int, int>> edges;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("pattern edge '" + std::string(item) + "' is not u-v");
    edges.emplace_back(parse_int(item.substr(0, dash), "vertex"), parse_int(item.substr(dash + 1), "vertex"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Pattern::from_edges(n, edges);
}

Permutation::Permutation(const std::vector<int>& image) : n_(static_cast<int>(image.size())) {
  if (n_ < 1 || n_ > kMaxPatternSize) throw std::invalid_argument("Permutation: size out of range");
  unsigned seen = 0;
  for (int i = 0; i < n_; ++i) {
    int v = image[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n_ || ((seen >> v) & 1U)) throw std::invalid_argument("Permutation: not a bijection");
    seen |= 1U << v;
    map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(image);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation out = b;
  for (int i = 0; i < b.n_; ++i) out.map_[i] = a.map_[b.map_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int i = 0; i < n_; ++i) out.map_[map_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool preserves_edges(const Pattern& p, const Permutation& perm) {
  for (int u = 0; u < p.size(); ++u) {
    for (int v = u + 1; v < p.size(); ++v) {
      if (p.adjacent(u, v) != p.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

PermutationGroup automorphisms(const Pattern& p) {
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  std::iota(image.begin(), image.end(), 0);
  PermutationGroup group;
  do {
    Permutation perm(image);
    if (preserves_edges(p, perm)) group.push_back(perm);
  } while (std::next_permutation(image.begin(), image.end()));
  // next_permutation starts from the identity, so group[0] is the identity.
  return group;
}

std::vector<Cycle> disjoint_cycles(const Permutation& perm) {
  std::vector<Cycle> cycles;
  unsigned seen = 0;
  for (int start = 0; start < perm.size(); ++start) {
    if ((seen >> start) & 1U) continue;
    Cycle c;
    for (int v = start; !((seen >> v) & 1U); v = perm[v]) {
      seen |= 1U << v;
      c.push_back(v);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<std::pair<int, int>> transpositions_of(const Cycle& cycle) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = cycle.size(); i-- > 1;) out.emplace_back(cycle.front(), cycle[i]);
  return out;
}

std::vector<std::pair<int, int>> find_2cycles(const Permutation& perm) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < perm.size(); ++v) {
    int w = perm[v];
    if (w > v && perm[w] == v) out.emplace_back(v, w);
  }
  return out;
}

std::string to_cycle_string(const Permutation& perm) {
  std::string s;
  for (const auto& c : disjoint_cycles(perm)) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace gpm
