#include "gpm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gpm/errors.hpp"

namespace gpm {

VertexSet::VertexSet(std::vector<Vertex> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i - 1] >= elems_[i]) throw std::invalid_argument("VertexSet: elements not strictly ascending");
  }
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

void intersect_into(std::span<const Vertex> a, std::span<const Vertex> b, std::vector<Vertex>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

std::size_t intersect_count(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  intersect_into(a.elems(), b.elems(), out);
  return VertexSet(std::move(out));
}

Graph::Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors,
             std::vector<std::uint64_t> original_ids)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)), original_ids_(std::move(original_ids)) {
  check_invariants();
  triangle_count_ = count_triangles(*this);
}

Graph::Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors, Count triangle_count,
             std::vector<std::uint64_t> original_ids)
    : offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)),
      original_ids_(std::move(original_ids)),
      triangle_count_(triangle_count) {
  check_invariants();
}

void Graph::check_invariants() const {
  if (offsets_.empty()) throw std::invalid_argument("Graph: offsets must have length V+1");
  const std::size_t n = offsets_.size() - 1;
  if (offsets_.front() != 0 || offsets_.back() != neighbors_.size() || neighbors_.size() % 2 != 0) {
    throw std::invalid_argument("Graph: offsets inconsistent with neighbor array");
  }
  if (!original_ids_.empty() && original_ids_.size() != n) {
    throw std::invalid_argument("Graph: original id map has wrong length");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) throw std::invalid_argument("Graph: offsets not monotone");
    auto nb = neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n || nb[i] == v) throw std::invalid_argument("Graph: neighbor out of range or self-loop");
      if (i > 0 && nb[i - 1] >= nb[i]) throw std::invalid_argument("Graph: neighbor slice not strictly ascending");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : neighbors(static_cast<Vertex>(v))) {
      if (!has_edge(u, static_cast<Vertex>(v))) throw std::invalid_argument("Graph: adjacency not symmetric");
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_ && a.triangle_count_ == b.triangle_count_;
}

namespace {

struct CsrBuild {
  std::vector<std::uint64_t> offsets;
  std::vector<Vertex> neighbors;
  std::size_t duplicates = 0;
};

// Assumes self-loops already removed.
CsrBuild build_csr(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  CsrBuild out;
  out.offsets.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++out.offsets[u + 1];
    ++out.offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) out.offsets[i + 1] += out.offsets[i];
  std::vector<Vertex> raw(out.offsets.back());
  std::vector<std::uint64_t> fill(out.offsets.begin(), out.offsets.end() - 1);
  for (auto [u, v] : edges) {
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }
  // Sort + dedupe each slice, then compact.
  out.neighbors.reserve(raw.size());
  std::vector<std::uint64_t> compact(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(out.offsets[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(out.offsets[v + 1]);
    std::sort(first, last);
    auto uend = std::unique(first, last);
    out.duplicates += static_cast<std::size_t>(last - uend);
    out.neighbors.insert(out.neighbors.end(), first, uend);
    compact[v + 1] = out.neighbors.size();
  }
  out.offsets = std::move(compact);
  // Each duplicated undirected edge was counted once from each endpoint.
  out.duplicates /= 2;
  return out;
}

}  // namespace

Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> clean;
  clean.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("graph_from_edges: vertex id out of range");
    if (u != v) clean.emplace_back(u, v);
  }
  auto csr = build_csr(n, clean);
  return Graph(std::move(csr.offsets), std::move(csr.neighbors));
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph load_edge_list(std::istream& in, LoadDiagnostics* diag) {
  LoadDiagnostics local;
  std::unordered_map<std::uint64_t, Vertex> compact;
  std::vector<std::uint64_t> original;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](std::uint64_t raw) {
    auto [it, inserted] = compact.try_emplace(raw, static_cast<Vertex>(original.size()));
    if (inserted) original.push_back(raw);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    std::uint64_t u = 0, v = 0;
    if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\" with nonnegative integers");
    }
    constexpr auto kMaxId = std::numeric_limits<std::uint32_t>::max();
    if (u > kMaxId || v > kMaxId) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": vertex id exceeds 2^32-1");
    }
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    Vertex cu = intern(u);
    Vertex cv = intern(v);
    edges.emplace_back(cu, cv);
  }
  local.lines = lineno;
  if (original.empty()) throw ParseError("edge list contains no edges");

  auto csr = build_csr(original.size(), edges);
  local.duplicates_dropped = csr.duplicates;
  if (diag) *diag = local;
  return Graph(std::move(csr.offsets), std::move(csr.neighbors), std::move(original));
}

Graph load_edge_list(std::string_view text, LoadDiagnostics* diag) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, diag);
}

Graph load_edge_list_file(const std::filesystem::path& path, LoadDiagnostics* diag) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());
  return load_edge_list(in, diag);
}

Count count_triangles(const Graph& g) {
  // Orient each edge low -> high and count w > v in N(u) ∩ N(v).
  Count total = 0;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto above_u = std::upper_bound(nu.begin(), nu.end(), u);
    for (auto it = above_u; it != nu.end(); ++it) {
      Vertex v = *it;
      auto nv = g.neighbors(v);
      auto a = std::span<const Vertex>(std::upper_bound(nu.begin(), nu.end(), v), nu.end());
      auto b = std::span<const Vertex>(std::upper_bound(nv.begin(), nv.end(), v), nv.end());
      total += intersect_count(a, b);
    }
  }
  return total;
}

namespace {

constexpr char kMagic[4] = {'G', 'P', 'M', 'C'};
constexpr std::uint32_t kVersion = 1;

template <class T>
T to_le(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto* p = reinterpret_cast<unsigned char*>(&v);
    std::reverse(p, p + sizeof(T));
  }
  return v;
}

template <class T>
void write_scalar(std::ostream& out, T v) {
  v = to_le(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void write_array(std::ostream& out, std::span<const T> data) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size_bytes()));
  } else {
    for (T v : data) write_scalar(out, v);
  }
}

template <class T>
T read_scalar(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("graph cache truncated");
  return to_le(v);
}

template <class T>
std::vector<T> read_array(std::istream& in, std::uint64_t count) {
  std::vector<T> data(count);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count * sizeof(T)));
  if (!in) throw IoError("graph cache truncated");
  if constexpr (std::endian::native == std::endian::big) {
    for (auto& v : data) v = to_le(v);
  }
  return data;
}

}  // namespace

void save_cache(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write graph cache " + path.string());
  out.write(kMagic, 4);
  write_scalar<std::uint32_t>(out, kVersion);
  write_scalar<std::uint64_t>(out, g.vertex_count());
  write_scalar<std::uint64_t>(out, g.edge_count());
  write_scalar<std::uint64_t>(out, g.triangle_count());
  write_array(out, g.offsets());
  write_array(out, g.adjacency());
  if (!out) throw IoError("failed writing graph cache " + path.string());
}

Graph load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph cache " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  if (!in) throw IoError("graph cache truncated");
  if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError("not a graph cache (bad magic)");
  if (auto version = read_scalar<std::uint32_t>(in); version != kVersion) {
    throw FormatError("unsupported graph cache version " + std::to_string(version));
  }
  const auto v = read_scalar<std::uint64_t>(in);
  const auto e = read_scalar<std::uint64_t>(in);
  const auto tri = read_scalar<std::uint64_t>(in);
  if (v >= std::numeric_limits<std::uint32_t>::max() || e > (std::uint64_t{1} << 40)) {
    throw FormatError("graph cache header out of range");
  }
  auto offsets = read_array<std::uint64_t>(in, v + 1);
  auto neighbors = read_array<Vertex>(in, 2 * e);
  try {
    return Graph(std::move(offsets), std::move(neighbors), tri, {});
  } catch (const std::invalid_argument& err) {
    throw FormatError(std::string("graph cache inconsistent: ") + err.what());
  }
}

bool is_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  in.read(magic, 4);
  return in && std::memcmp(magic, kMagic, 4) == 0;
}

}  // namespace gpm
