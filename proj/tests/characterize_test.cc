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

#include "dtdp/characterize.h"

#include <gtest/gtest.h>

#include <random>

#include "dtdp/families.h"
#include "dtdp/json_io.h"
#include "dtdp/minimality.h"
#include "oracles.h"

namespace dtdp {
namespace {

bool all_singletons(const PartitionFamily& p) {
  for (const auto& blocks : p.blocks) {
    for (const auto& b : blocks) {
      if (b.size() != 1) return false;
    }
  }
  return true;
}

void expect_round_trip(const Multigraph& g, const Decomposition& d) {
  const Subdivision s = s2_full(d.h, d.p, d.theta);
  EXPECT_TRUE(verify_isomorphism(s.graph, g, d.iso)) << to_mgf(g);
  EXPECT_TRUE(is_dt_pair(g, d.pair));
  for (const auto& [leaf, count] : d.theta) EXPECT_GE(count, 1);
}

TEST(PairPropertiesTest, Examples) {
  const Multigraph c9 = cycle_graph(9);
  const auto c9_pairs = enumerate_dt_pairs(c9);
  ASSERT_FALSE(c9_pairs.empty());
  for (const DtPair& pair : c9_pairs) {
    EXPECT_TRUE(check_pair_properties(c9, pair).all());
  }

  const Multigraph p4 = path_graph(4);
  EXPECT_TRUE(check_pair_properties(p4, *find_dt_pair(p4)).all());

  // K4 with D = {0}, T = {1, 2}: D is a maximal independent set, and T's
  // vertices see two non-leaf vertices outside T.
  const auto k4 = check_pair_properties(complete_graph(4), DtPair{{0}, {1, 2}});
  EXPECT_TRUE(k4.d_maximal_independent);
  EXPECT_TRUE(k4.t_components_stars);
  EXPECT_FALSE(k4.t_neighbor_condition);
  EXPECT_FALSE(k4.detail.empty());

  EXPECT_THROW(check_pair_properties(p4, DtPair{{0}, {1}}), std::invalid_argument);
}

TEST(DecomposeTest, CycleOfNine) {
  const auto d = decompose_to_subdivision(cycle_graph(9));
  ASSERT_TRUE(d);
  EXPECT_TRUE(are_isomorphic(d->h, cycle_graph(3)));
  EXPECT_TRUE(all_singletons(d->p));
  for (const auto& [leaf, count] : d->theta) EXPECT_EQ(count, 1);
  expect_round_trip(cycle_graph(9), *d);
}

TEST(DecomposeTest, PathOfTen) {
  const auto d = decompose_to_subdivision(path_graph(10));
  ASSERT_TRUE(d);
  EXPECT_TRUE(are_isomorphic(d->h, path_graph(4)));
  EXPECT_TRUE(all_singletons(d->p));
  expect_round_trip(path_graph(10), *d);
}

TEST(DecomposeTest, CoronaMergesFarParts) {
  const Multigraph g = corona(path_graph(3));
  const auto d = decompose_to_subdivision(g);
  ASSERT_TRUE(d);
  EXPECT_TRUE(are_isomorphic(d->h, path_graph(3)));
  const auto cls = classify_partition(d->h, d->p);
  int far = 0;
  for (const auto& blocks : cls.blocks) {
    for (BlockClass b : blocks) far += b == BlockClass::kFarParts ? 1 : 0;
  }
  EXPECT_EQ(far, 1);
  expect_round_trip(g, *d);
}

TEST(DecomposeTest, NonDtdpHasNone) {
  EXPECT_FALSE(decompose_to_subdivision(cycle_graph(5)));
  EXPECT_TRUE(all_decompositions(cycle_graph(7)).empty());
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_minimal(cycle_graph(3)).verdict, Verdict::kCycle369);
  EXPECT_EQ(classify_minimal(cycle_graph(6)).verdict, Verdict::kCycle369);
  EXPECT_EQ(classify_minimal(cycle_graph(9)).verdict, Verdict::kCycle369);

  const auto p10 = classify_minimal(path_graph(10));
  ASSERT_EQ(p10.verdict, Verdict::kSubdivision);
  ASSERT_TRUE(p10.decomposition);
  EXPECT_TRUE(are_isomorphic(p10.decomposition->h, path_graph(4)));

  const auto c12 = classify_minimal(cycle_graph(12));
  EXPECT_EQ(c12.verdict, Verdict::kNotMinimal);
  EXPECT_FALSE(c12.reason.empty());
  EXPECT_EQ(classify_minimal(cycle_graph(5)).verdict, Verdict::kNotMinimal);
  EXPECT_STREQ(verdict_name(Verdict::kCycle369), "cycle369");
}

TEST(ClassifyTest, RejectsBadInput) {
  Multigraph looped = path_graph(3);
  looped.add_edge(0, 0);
  EXPECT_THROW(classify_minimal(looped), std::invalid_argument);
  EXPECT_THROW(classify_minimal(path_graph(2)), std::invalid_argument);
  Multigraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  EXPECT_THROW(classify_minimal(split), std::invalid_argument);
}

TEST(WitnessTest, CycleOfFour) {
  const Multigraph c4 = cycle_graph(4);
  const NonminimalWitness w = construct_nonminimal_witness(c4, identity_partition(c4));
  EXPECT_TRUE(are_isomorphic(w.host, cycle_graph(12)));
  EXPECT_FALSE(w.removed_edges.empty());
  EXPECT_EQ(w.subgraph.num_vertices(), 12);
  EXPECT_LT(w.subgraph.num_edges(), 12);
  EXPECT_TRUE(is_dt_pair(w.subgraph, w.pair));
  ASSERT_TRUE(w.certificate);
  EXPECT_TRUE(verify_good_certificate(*w.certificate).ok);
}

TEST(WitnessTest, TripleEdge) {
  const Multigraph h = k2s(3);
  const NonminimalWitness w = construct_nonminimal_witness(h, identity_partition(h));
  EXPECT_TRUE(is_dt_pair(w.subgraph, w.pair));
  EXPECT_FALSE(is_minimal_dtdp(w.host).minimal);
}

TEST(WitnessTest, Errors) {
  EXPECT_THROW(construct_nonminimal_witness(cycle_graph(3),
                                            identity_partition(cycle_graph(3))),
               std::invalid_argument);
  // K1 with two loops is fine, but contracting the twin parts of one loop
  // is not.
  const Multigraph h = k1s(2);
  PartitionFamily twin = identity_partition(h);
  twin.blocks[0] = {{{0, 0}, {0, 1}}, {{1, 0}}, {{1, 1}}};
  EXPECT_NO_THROW(construct_nonminimal_witness(h, identity_partition(h)));
  EXPECT_THROW(construct_nonminimal_witness(h, twin), std::invalid_argument);
}

// Random partitions of small connected multigraphs with a good subgraph.
TEST(WitnessPropertyTest, RandomPartitionsGiveValidWitnesses) {
  std::mt19937_64 rng(71);
  int built = 0;
  for (int i = 0; i < 400 && built < 150; ++i) {
    const Multigraph h = oracle::random_connected(rng, 5, 2, 0.2);
    if (h.num_edges() > 6 || !has_good_subgraph(h)) continue;
    PartitionFamily p;
    p.blocks.resize(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      for (HalfEdge x : halves_at(h, v)) {
        auto& b = p.blocks[v];
        const size_t k = std::uniform_int_distribution<size_t>(0, b.size())(rng);
        if (k == b.size()) b.emplace_back();
        b[k].push_back(x);
      }
    }
    if (classify_partition(h, p).loop_creating) continue;
    Theta theta;
    for (VertexId leaf : s2_leaves(h, p)) {
      theta[leaf] = std::uniform_int_distribution<int>(1, 2)(rng);
    }
    const NonminimalWitness w = construct_nonminimal_witness(h, p, theta);
    EXPECT_EQ(w.host, s2_full(h, p, theta).graph);
    Multigraph expected = w.host;
    for (EdgeId e : w.removed_edges) expected = delete_edge(expected, e);
    EXPECT_EQ(w.subgraph, expected);
    EXPECT_FALSE(w.removed_edges.empty());
    EXPECT_TRUE(is_dt_pair(w.subgraph, w.pair)) << to_mgf(h);
    ++built;
  }
  EXPECT_GE(built, 100);
}

// The structural verdict agrees with the exhaustive oracle, and each
// subdivision verdict round-trips through s2_full.
TEST(CharacterizationPropertyTest, AgreesWithOracleOnSmallGraphs) {
  std::mt19937_64 rng(72);
  int minimal = 0;
  for (int i = 0; i < 400; ++i) {
    Multigraph g = oracle::random_connected(rng, 9, 3, 0.0);
    if (g.num_vertices() < 3 || !g.is_simple() || g.num_edges() > 14) continue;
    const auto c = classify_minimal(g);
    const bool expected = oracle::is_minimal(g);
    EXPECT_EQ(c.verdict != Verdict::kNotMinimal, expected) << to_mgf(g);
    if (c.verdict == Verdict::kSubdivision) {
      ASSERT_TRUE(c.decomposition);
      expect_round_trip(g, *c.decomposition);
      for (const DtPair& pair : enumerate_dt_pairs(g)) {
        EXPECT_TRUE(check_pair_properties(g, pair).all()) << to_mgf(g);
      }
    }
    minimal += expected ? 1 : 0;
  }
  EXPECT_GT(minimal, 5);
}

TEST(JsonTest, RoundTrips) {
  const Multigraph g = corona(path_graph(3));
  const auto d = decompose_to_subdivision(g);
  ASSERT_TRUE(d);
  const Json j = to_json(*d);
  EXPECT_EQ(partition_from_json(d->h, j["partition"]), d->p);
  EXPECT_EQ(theta_from_json(j["theta"]), d->theta);
  EXPECT_EQ(to_json(DtPair{{0, 3}, {1, 2}}).dump(), R"({"D":[0,3],"T":[1,2]})");
  EXPECT_THROW(partition_from_json(path_graph(2), Json::parse("[[[[0,0]]]]")),
               std::invalid_argument);
}

}  // namespace
}  // namespace dtdp
