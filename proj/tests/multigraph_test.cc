// Copyright 2026 The dtdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dtdp/multigraph.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dtdp/domination.h"
#include "dtdp/families.h"
#include "dtdp/subdivision.h"
#include "oracles.h"

namespace dtdp {
namespace {

TEST(MultigraphTest, LoopCountsTwiceAndIsOwnNeighbor) {
  Multigraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.loop_count(0), 1);
  EXPECT_EQ(g.neighbors(0), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(g.closed_neighborhood(0), g.neighbors(0));
  EXPECT_TRUE(g.is_leaf(1));
  EXPECT_TRUE(g.is_support(0));
  EXPECT_FALSE(g.is_simple());
}

TEST(MultigraphTest, HandshakeOnRandomMultigraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 9);
    int sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

TEST(MultigraphTest, DerivedSetsAreConsistent) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 9);
    for (VertexId v : g.leaves()) EXPECT_EQ(g.degree(v), 1);
    std::vector<VertexId> supports;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool s = false;
      for (VertexId w : g.neighbors(v)) s = s || (w != v && g.is_leaf(w));
      if (s) supports.push_back(v);
    }
    EXPECT_EQ(g.supports(), supports);
    for (VertexId v : g.strong_supports()) {
      int leaves = 0;
      for (VertexId w : g.neighbors(v)) leaves += g.is_leaf(w) ? 1 : 0;
      EXPECT_GE(leaves, 2);
    }
    EXPECT_EQ(g.weak_supports().size() + g.strong_supports().size(),
              g.supports().size());
  }
}

TEST(MultigraphTest, ParallelEdgesHaveMultiplicity) {
  const Multigraph c2 = cycle_graph(2);
  EXPECT_EQ(c2.multiplicity(0, 1), 2);
  EXPECT_EQ(c2.neighbors(0), std::vector<VertexId>{1});
  EXPECT_EQ(c2.degree(0), 2);
}

TEST(MultigraphTest, AddEdgeRejectsMissingVertex) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
}

TEST(DeleteEdgeTest, CycleMinusEdgeIsPath) {
  const Multigraph c3 = cycle_graph(3);
  for (EdgeId e : c3.edge_ids()) {
    EXPECT_TRUE(are_isomorphic(delete_edge(c3, e), path_graph(3)));
  }
}

TEST(DeleteEdgeTest, LoopRemovalLeavesIsolatedVertex) {
  const Multigraph g = delete_edge(cycle_graph(1), 0);
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
  EXPECT_EQ(g.degree(0), 0);
}

TEST(DeleteEdgeTest, KeepsOtherIds) {
  const Multigraph g = delete_edge(path_graph(4), 1);
  EXPECT_FALSE(g.has_edge(1));
  EXPECT_TRUE(g.has_edge(2));
  EXPECT_EQ(g.edge(2).u, 2);
  EXPECT_EQ(g.edge_ids(), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(g.edge_id_bound(), 3);
  EXPECT_EQ(g.compacted().edge_ids(), (std::vector<EdgeId>{0, 1}));
}

TEST(DeleteEdgeTest, MissingEdgeThrows) {
  EXPECT_THROW(delete_edge(path_graph(3), 99), std::out_of_range);
  const Multigraph g = delete_edge(path_graph(3), 0);
  EXPECT_THROW(delete_edge(g, 0), std::out_of_range);
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(connected_components(path_graph(4)).size(), 1u);
  Multigraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(connected_components(two).size(), 2u);
  Multigraph k1_c1(2);
  k1_c1.add_edge(1, 1);
  const auto comps = connected_components(k1_c1);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], std::vector<VertexId>{0});
  EXPECT_FALSE(is_connected(k1_c1));
}

TEST(InducedSubgraphTest, RelabelsInOrder) {
  const Multigraph g = induced_subgraph(cycle_graph(5), std::vector<VertexId>{1, 2, 4});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(IsomorphismTest, Examples) {
  EXPECT_TRUE(are_isomorphic(s2(cycle_graph(2)).graph, cycle_graph(6)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(1), Multigraph(1)));
  // Same degree sequence: C6 vs two triangles.
  Multigraph two_triangles(6);
  for (int i = 0; i < 3; ++i) {
    two_triangles.add_edge(i, (i + 1) % 3);
    two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
  // Loop multiplicity matters.
  EXPECT_FALSE(are_isomorphic(k1s(2), k1s(3)));
  EXPECT_FALSE(are_isomorphic(k2s(2), k2s(3)));
}

TEST(IsomorphismTest, RandomRelabelingsAreRecognised) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 10);
    std::vector<VertexId> perm(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph h(g.num_vertices());
    std::vector<EdgeId> ids = g.edge_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    for (EdgeId e : ids) h.add_edge(perm[g.edge(e).u], perm[g.edge(e).v]);
    EXPECT_EQ(invariant_hash(g), invariant_hash(h));
    const auto iso = are_isomorphic(g, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(verify_isomorphism(g, h, *iso));
  }
}

TEST(IsomorphismTest, SingleEdgeMoveIsDetected) {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 8);
    const EdgeId e = g.edge_ids().front();
    const Multigraph h = add_edge(delete_edge(g, e), g.edge(e).u, g.edge(e).u);
    if (g.is_loop(e)) continue;
    // Moving an edge onto a loop changes the loop count.
    EXPECT_FALSE(are_isomorphic(g, h));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(MgfTest, ParsesExamples) {
  EXPECT_TRUE(are_isomorphic(parse_mgf("3 2\n0 1\n1 2"), path_graph(3)));
  const Multigraph c1 = parse_mgf("1 1\n0 0");
  EXPECT_EQ(c1.degree(0), 2);
  EXPECT_EQ(parse_mgf("2 2\n0 1\n0 1"), cycle_graph(2));
  EXPECT_EQ(parse_mgf("# comment\n\n2 1\n# x\n0 1\n"), path_graph(2));
}

TEST(MgfTest, ReportsLineNumbers) {
  try {
    parse_mgf("2 2\n0 1\n0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_mgf("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_mgf("2 1\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_mgf("x 1\n"), ParseError);
  EXPECT_THROW(parse_mgf(""), ParseError);
}

TEST(MgfTest, RoundTrip) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 9);
    EXPECT_EQ(parse_mgf(to_mgf(g)), g);
  }
}

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6Test, MatchesReferenceCodec) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(Multigraph(1)), "@");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(complete_graph(9)), "H~~~~~~");
  EXPECT_EQ(to_graph6(cycle_graph(10)), "IhCGGC@_G");
  EXPECT_EQ(to_graph6(star_graph(5)), "Esa?");
  Multigraph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(to_graph6(petersen), "IheA@GUAo");
  const std::string p70 =
      "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@???"
      "?C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C"
      "??????G??????G??????C??????@???????G???????_??????@???????@????????_???"
      "????G???????@????????C????????G????????G????????C????????@?????????G???"
      "??????_????????@?????????@??????????_?????????G?????????@??????????C???"
      "???????G??????????G??????????C??????????@???????????G";
  EXPECT_EQ(to_graph6(path_graph(70)), p70);
  EXPECT_EQ(from_graph6(p70), path_graph(70));
}

TEST(Graph6Test, Parses) {
  EXPECT_TRUE(are_isomorphic(from_graph6("Bw"), complete_graph(3)));
  EXPECT_EQ(from_graph6("@").num_vertices(), 1);
  EXPECT_EQ(from_graph6(">>graph6<<Bw"), from_graph6("Bw"));
  EXPECT_THROW(from_graph6("B\x01"), ParseError);
  EXPECT_THROW(from_graph6("B"), ParseError);
  EXPECT_THROW(from_graph6("Bww"), ParseError);
  EXPECT_THROW(from_graph6("B~"), ParseError);  // padding bits set
}

TEST(Graph6Test, RoundTripAndRejectsMultigraphs) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    Multigraph g(std::uniform_int_distribution<int>(1, 70)(rng));
    std::bernoulli_distribution coin(0.1);
    for (int u = 0; u < g.num_vertices(); ++u) {
      for (int v = u + 1; v < g.num_vertices(); ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    EXPECT_TRUE(are_isomorphic(from_graph6(to_graph6(g)), g));
  }
  EXPECT_THROW(to_graph6(cycle_graph(1)), std::invalid_argument);
  EXPECT_THROW(to_graph6(cycle_graph(2)), std::invalid_argument);
}

TEST(DotTest, ColorsFollowPair) {
  const Multigraph g = path_graph(4);
  const DtPair pair{{0, 3}, {1, 2}};
  const std::string dot = to_dot(g, &pair);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(dot.find("  0 [color="), std::string::npos);
  EXPECT_NE(dot.find("  1 [color="), std::string::npos);
}

}  // namespace
}  // namespace dtdp
