#include "gpm/graph.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "gpm/errors.hpp"
#include "gpm/generators.hpp"
#include "oracles.hpp"

namespace gpm {
namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gpm_graph_test_" + name);
}

TEST(LoadEdgeList, SingleTriangle) {
  const auto g = load_edge_list(std::string_view("0 1\n1 2\n2 0"));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.triangle_count(), 1u);
}

TEST(LoadEdgeList, CompleteGraphOnFour) {
  const auto g = load_edge_list(std::string_view("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"));
  EXPECT_EQ(g.triangle_count(), 4u);
}

TEST(LoadEdgeList, DropsSelfLoopsAndDuplicates) {
  LoadDiagnostics diag;
  const auto g = load_edge_list(std::string_view("0 1\n1 0\n0 0"), &diag);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(diag.self_loops_dropped, 1u);
  EXPECT_EQ(diag.duplicates_dropped, 1u);
}

TEST(LoadEdgeList, CommentsAndBlankLines) {
  const auto g = load_edge_list(std::string_view("# header\n\n10 20\n  \n20 30 \n"));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.original_id(0), 10u);
  EXPECT_EQ(g.original_id(2), 30u);
}

TEST(LoadEdgeList, MalformedLineNamesLine) {
  try {
    load_edge_list(std::string_view("0 1\n1 2 3\n"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_edge_list(std::string_view("0 x\n")), ParseError);
  EXPECT_THROW(load_edge_list(std::string_view("0 4294967296\n")), ParseError);
}

TEST(LoadEdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(load_edge_list(std::string_view("")), ParseError);
  EXPECT_THROW(load_edge_list(std::string_view("# nothing\n")), ParseError);
}

TEST(Graph, NeighborSlicesAscendingAndSymmetric) {
  const auto g = erdos_renyi(60, 0.2, 3);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto nb = g.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_TRUE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex v : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(v, u));
    }
  }
}

TEST(Graph, RejectsBrokenCsr) {
  EXPECT_THROW(Graph({0, 1, 1, 2}, {1, 0}), std::invalid_argument);  // asymmetric
  EXPECT_THROW(Graph({0, 2, 3}, {1, 1, 0}), std::invalid_argument);  // duplicate
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(VertexSet({1, 3, 5, 7}), VertexSet({3, 4, 5})), VertexSet({3, 5}));
  EXPECT_EQ(intersect(VertexSet(), VertexSet({1, 2})), VertexSet());
  EXPECT_THROW(VertexSet({2, 1}), std::invalid_argument);
}

TEST(Intersect, MatchesQuadraticScanOnRandomGraph) {
  const auto g = erdos_renyi(25, 0.3, 11);
  std::vector<Vertex> merged;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      intersect_into(g.neighbors(u), g.neighbors(v), merged);
      const auto scanned = oracles::intersection_by_scan(g.neighbors(u), g.neighbors(v));
      EXPECT_EQ(merged, scanned);
      EXPECT_EQ(intersect_count(g.neighbors(u), g.neighbors(v)), scanned.size());
    }
  }
}

TEST(CountTriangles, Examples) {
  EXPECT_EQ(count_triangles(complete_graph(4)), 4u);
  EXPECT_EQ(count_triangles(cycle_graph(4)), 0u);
}

TEST(CountTriangles, MatchesTripleEnumeration) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto g = erdos_renyi(50, 0.2, seed);
    EXPECT_EQ(count_triangles(g), oracles::triangles_by_triples(g)) << "seed " << seed;
  }
}

TEST(Cache, RoundTripCompleteGraph) {
  const auto path = temp_path("k4.bin");
  const auto g = complete_graph(4);
  save_cache(g, path);
  EXPECT_TRUE(is_cache_file(path));
  const auto back = load_cache(path);
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.triangle_count(), 4u);
  std::filesystem::remove(path);
}

TEST(Cache, RoundTripRandomGraphArrays) {
  const auto path = temp_path("er.bin");
  const auto g = erdos_renyi(1000, 0.01, 5);
  save_cache(g, path);
  const auto back = load_cache(path);
  EXPECT_TRUE(std::ranges::equal(back.offsets(), g.offsets()));
  EXPECT_TRUE(std::ranges::equal(back.adjacency(), g.adjacency()));
  std::filesystem::remove(path);
}

TEST(Cache, WrongMagicIsFormatError) {
  const auto path = temp_path("bad.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOPE0000000000000000000000000000";
  }
  EXPECT_FALSE(is_cache_file(path));
  EXPECT_THROW(load_cache(path), FormatError);
  std::filesystem::remove(path);
}

TEST(Cache, TruncatedFileIsIoError) {
  const auto path = temp_path("short.bin");
  save_cache(complete_graph(5), path);
  std::filesystem::resize_file(path, std::filesystem::file_size(path) - 3);
  EXPECT_THROW(load_cache(path), IoError);
  std::filesystem::remove(path);
}

TEST(Generators, SeedDeterminism) {
  EXPECT_EQ(erdos_renyi(40, 0.2, 9), erdos_renyi(40, 0.2, 9));
  EXPECT_EQ(barabasi_albert(300, 3, 4), barabasi_albert(300, 3, 4));
  EXPECT_EQ(powerlaw_cluster(300, 3, 0.5, 4), powerlaw_cluster(300, 3, 0.5, 4));
  EXPECT_FALSE(erdos_renyi(40, 0.2, 9) == erdos_renyi(40, 0.2, 10));
}

TEST(Generators, PreferentialAttachmentEdgeCount) {
  // Clique on m+1 vertices, then exactly m new edges per vertex.
  const auto g = barabasi_albert(5000, 20, 7);
  EXPECT_EQ(g.edge_count(), 210u + 20u * (5000u - 21u));
}

}  // namespace
}  // namespace gpm
