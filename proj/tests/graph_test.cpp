#include <mindeg/graph.hpp>

#include <gtest/gtest.h>

#include <mindeg/random.hpp>

namespace mindeg {
namespace {

TEST(GraphTest, ConstructionValidatesEdges) {
  EXPECT_NO_THROW(Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(GraphTest, EdgeIndexFollowsListPosition) {
  const Graph g(4, {{2, 3}, {0, 1}, {1, 3}});
  EXPECT_EQ(g.edge_index(2, 3), 0);
  EXPECT_EQ(g.edge_index(3, 2), 0);
  EXPECT_EQ(g.edge_index(0, 1), 1);
  EXPECT_EQ(g.edge_index(0, 2), -1);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(GraphTest, CompleteBipartiteShape) {
  const Graph k1 = complete_bipartite(1);
  EXPECT_EQ(k1.vertex_count(), 2);
  EXPECT_EQ(k1.edge_count(), 1);

  const Graph k2 = complete_bipartite(2);
  EXPECT_EQ(k2.vertex_count(), 4);
  EXPECT_EQ(k2.edge_count(), 4);
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(k2.degree(v), 2);
  }

  EXPECT_EQ(complete_bipartite(3).edge_count(), 9);
  EXPECT_THROW(complete_bipartite(0), std::invalid_argument);
}

TEST(GraphTest, CompleteBipartiteIsRegularUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    const Graph g = complete_bipartite(n);
    for (int v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(g.degree(v), n) << "n=" << n << " v=" << v;
    }
  }
}

TEST(GraphTest, CompleteBipartiteRowMajorEdgeOrder) {
  const Graph g = complete_bipartite(3);
  // edge (i, n+j) must sit at index i*n + j
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(g.edge_index(i, 3 + j), i * 3 + j);
    }
  }
}

TEST(GraphTest, CompleteGraphShape) {
  EXPECT_EQ(complete_graph(2).edge_count(), 1);
  EXPECT_EQ(complete_graph(3).edge_count(), 3);
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(k4.edge_count(), 6);
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(k4.degree(v), 3);
  }
  EXPECT_THROW(complete_graph(0), std::invalid_argument);
}

TEST(HypergraphTest, RpartiteShape) {
  const UniformHypergraph h22 = complete_rpartite_hypergraph(2, 2);
  EXPECT_EQ(h22.edge_count(), 4);
  EXPECT_EQ(h22.vertex_count(), 4);

  const UniformHypergraph h23 = complete_rpartite_hypergraph(2, 3);
  EXPECT_EQ(h23.vertex_count(), 6);
  EXPECT_EQ(h23.edge_count(), 8);

  const UniformHypergraph h14 = complete_rpartite_hypergraph(1, 4);
  EXPECT_EQ(h14.edge_count(), 1);
  EXPECT_EQ(h14.edge_vertices(0).size(), 4u);

  EXPECT_THROW(complete_rpartite_hypergraph(0, 2), std::invalid_argument);
  EXPECT_THROW(complete_rpartite_hypergraph(2, 1), std::invalid_argument);
}

TEST(HypergraphTest, RpartiteEdgeAndIncidenceCounts) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 2; r <= 4; ++r) {
      const UniformHypergraph hg = complete_rpartite_hypergraph(n, r);
      long long expected_edges = 1;
      for (int i = 0; i < r; ++i) expected_edges *= n;
      ASSERT_EQ(hg.edge_count(), expected_edges);
      for (int v = 0; v < hg.vertex_count(); ++v) {
        ASSERT_EQ(hg.degree(v), expected_edges / n);
      }
    }
  }
}

TEST(HypergraphTest, CompleteHypergraphShape) {
  EXPECT_EQ(complete_hypergraph(1, 2).edge_count(), 1);
  EXPECT_EQ(complete_hypergraph(2, 2).edge_count(), 6);
  EXPECT_EQ(complete_hypergraph(2, 3).edge_count(), 20);
  EXPECT_THROW(complete_hypergraph(0, 3), std::invalid_argument);
}

TEST(HypergraphTest, ConstructionValidatesEdges) {
  EXPECT_THROW(UniformHypergraph(4, 2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(UniformHypergraph(4, 2, {{0, 5}}), std::invalid_argument);
  EXPECT_THROW(UniformHypergraph(4, 2, {{0, 1}, {1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(UniformHypergraph(4, 1, {}), std::invalid_argument);
  EXPECT_THROW(UniformHypergraph(4, 3, {{0, 1}}), std::invalid_argument);
}

TEST(ParseTest, ParsesSmallGraphs) {
  const Graph k2 = parse_graph("2 1\n0 1");
  EXPECT_EQ(k2.vertex_count(), 2);
  EXPECT_EQ(k2.edge_count(), 1);

  const Graph k3 = parse_graph("3 3\n0 1\n0 2\n1 2");
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(k3.min_degree(), 2);
}

TEST(ParseTest, CommentsAndBlankLinesAreIgnored) {
  const Graph g = parse_graph(
      "# complete graph on three vertices\n"
      "3 3\n"
      "\n"
      "0 1  # first edge\n"
      "0 2\n"
      "1 2\n");
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(ParseTest, ErrorsNameTheLine) {
  try {
    parse_graph("3 2\n0 1\n0 1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }

  EXPECT_THROW(parse_graph("2 1\n0 0"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 7"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 x"), ParseError);
  EXPECT_THROW(parse_graph("2 2\n0 1"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("2\n"), ParseError);
}

TEST(ParseTest, HypergraphRoundTrip) {
  const std::string text = "6 3 2\n0 1 2\n3 4 5\n";
  const UniformHypergraph hg = parse_hypergraph(text);
  EXPECT_EQ(hg.arity(), 3);
  EXPECT_EQ(to_text(hg), text);
  EXPECT_THROW(parse_hypergraph("6 3 1\n0 1 1"), ParseError);
  EXPECT_THROW(parse_hypergraph("6 3 2\n0 1 2\n2 0 1"), ParseError);
}

TEST(ParseTest, ConstructorOutputsRoundTripBitIdentically) {
  for (int n = 1; n <= 5; ++n) {
    const Graph g = complete_bipartite(n);
    EXPECT_EQ(to_text(parse_graph(to_text(g))), to_text(g));
    const Graph k = complete_graph(n);
    EXPECT_EQ(to_text(parse_graph(to_text(k))), to_text(k));
  }
  for (int n = 1; n <= 2; ++n) {
    for (int r = 2; r <= 3; ++r) {
      const UniformHypergraph hg = complete_rpartite_hypergraph(n, r);
      EXPECT_EQ(to_text(parse_hypergraph(to_text(hg))), to_text(hg));
      const UniformHypergraph ch = complete_hypergraph(n, r);
      EXPECT_EQ(to_text(parse_hypergraph(to_text(ch))), to_text(ch));
    }
  }
}

TEST(ParseTest, RandomGraphsRoundTrip) {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int v = 2 + static_cast<int>(rng.below(8));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < v; ++u) {
      for (int w = u + 1; w < v; ++w) {
        if (rng.below(2) == 0) edges.emplace_back(u, w);
      }
    }
    const Graph g(v, edges);
    const Graph reparsed = parse_graph(to_text(g));
    EXPECT_EQ(to_text(reparsed), to_text(g));
    EXPECT_EQ(reparsed.edges(), g.edges());
  }
}

}  // namespace
}  // namespace mindeg
