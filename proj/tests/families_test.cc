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

#include "dtdp/families.h"

#include <gtest/gtest.h>

#include "dtdp/minimality.h"
#include "oracles.h"

namespace dtdp {
namespace {

TEST(GeneratorsTest, Shapes) {
  EXPECT_EQ(path_graph(5).num_edges(), 4);
  EXPECT_EQ(cycle_graph(1).loop_count(0), 1);
  EXPECT_EQ(cycle_graph(2).multiplicity(0, 1), 2);
  EXPECT_EQ(complete_graph(5).num_edges(), 10);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  EXPECT_EQ(k1s(3).loop_count(0), 3);
  EXPECT_EQ(k2s(3).multiplicity(0, 1), 3);
  EXPECT_EQ(spider_graph({1, 2, 3}).num_vertices(), 7);
  EXPECT_THROW(path_graph(0), std::invalid_argument);
  EXPECT_THROW(spider_graph({1, 0}), std::invalid_argument);
}

TEST(ExpectedStatusTest, Examples) {
  EXPECT_EQ(expected_status(FamilyKind::kPath, 10), (ExpectedStatus{true, true}));
  EXPECT_EQ(expected_status(FamilyKind::kCycle, 5), (ExpectedStatus{false, false}));
  EXPECT_EQ(expected_status(FamilyKind::kComplete, 4), (ExpectedStatus{true, false}));
}

// Small members checked against the exhaustive oracle.
TEST(ExpectedStatusTest, AgreesWithOracle) {
  for (int n = 1; n <= 11; ++n) {
    const auto e = expected_status(FamilyKind::kPath, n);
    EXPECT_EQ(e.is_dtdp, oracle::is_dtdp(path_graph(n))) << n;
    EXPECT_EQ(e.is_minimal, oracle::is_minimal(path_graph(n))) << n;
  }
  for (int n = 3; n <= 10; ++n) {
    const auto e = expected_status(FamilyKind::kCycle, n);
    EXPECT_EQ(e.is_dtdp, oracle::is_dtdp(cycle_graph(n))) << n;
    EXPECT_EQ(e.is_minimal, oracle::is_minimal(cycle_graph(n))) << n;
  }
  for (int n = 3; n <= 5; ++n) {
    const auto e = expected_status(FamilyKind::kComplete, n);
    EXPECT_EQ(e.is_minimal, oracle::is_minimal(complete_graph(n))) << n;
  }
}

TEST(CoronaTest, Examples) {
  const Multigraph c = corona(path_graph(3));
  EXPECT_EQ(c.num_vertices(), 6);
  EXPECT_TRUE(is_minimal_dtdp(c).minimal);
  const auto c4 = is_minimal_dtdp(corona(cycle_graph(4)));
  EXPECT_TRUE(c4.dtdp);
  EXPECT_FALSE(c4.minimal);
  EXPECT_TRUE(is_minimal_dtdp(corona(cycle_graph(1))).minimal);
}

TEST(RootedTreeTest, Validation) {
  EXPECT_THROW(RootedTree(cycle_graph(3), 0), std::invalid_argument);
  EXPECT_THROW(RootedTree(path_graph(3), 3), std::invalid_argument);
  const RootedTree t(path_graph(4), 1);
  EXPECT_EQ(t.distance(3), 2);
  EXPECT_EQ(t.tree_leaves(), (std::vector<VertexId>{0, 3}));
  // A degree-1 root is itself a leaf.
  EXPECT_EQ(RootedTree(path_graph(3), 0).tree_leaves(), (std::vector<VertexId>{0, 2}));
}

TEST(SkClassTest, Examples) {
  EXPECT_EQ(sk_class(RootedTree(star_graph(3), 0)), 1);
  const RootedTree s3(spider_graph({3, 3, 3}), 0);
  EXPECT_EQ(sk_class(s3), 3);
  EXPECT_TRUE(is_minimal_dtdp(s3.tree()).minimal);
  const RootedTree p5(path_graph(5), 2);
  EXPECT_EQ(sk_class(p5), 2);
  EXPECT_FALSE(is_minimal_dtdp(p5.tree()).dtdp);
  EXPECT_EQ(sk_class(RootedTree(Multigraph(1), 0)), 0);
  EXPECT_FALSE(sk_class(RootedTree(path_graph(4), 1)));
}

TEST(FamilyFTest, Examples) {
  const RootedTree wounded(spider_graph({1, 2}), 0);
  EXPECT_EQ(family_f_class(wounded), FamilyFClass::kWoundedSpider);
  EXPECT_TRUE(is_minimal_dtdp(wounded.tree()).minimal);
  const RootedTree p7(spider_graph({1, 5}), 0);
  EXPECT_EQ(family_f_class(p7), FamilyFClass::kMember);
  EXPECT_TRUE(is_dtdp(p7.tree()));
  const RootedTree p5(spider_graph({1, 3}), 0);
  EXPECT_EQ(family_f_class(p5), FamilyFClass::kNotMember);
  EXPECT_FALSE(is_dtdp(p5.tree()));
  // Needs at least one long leg.
  EXPECT_EQ(family_f_class(RootedTree(star_graph(3), 0)), FamilyFClass::kNotMember);
}

// Known counts of rooted and free trees; distinctness is checked directly.
TEST(TreeEnumerationTest, Counts) {
  const int rooted[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  const int free_trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(enumerate_rooted_trees(n).size(), static_cast<size_t>(rooted[n - 1]));
  }
  for (int n = 1; n <= 11; ++n) {
    const auto trees = enumerate_free_trees(n);
    EXPECT_EQ(trees.size(), static_cast<size_t>(free_trees[n - 1]));
    for (size_t i = 0; i < trees.size() && n <= 8; ++i) {
      for (size_t j = i + 1; j < trees.size(); ++j) {
        EXPECT_FALSE(are_isomorphic(trees[i], trees[j]));
      }
    }
  }
}

TEST(TreeEnumerationTest, RootedTreesAreDistinct) {
  // Rooted isomorphism: mark the root with a pendant triangle and compare.
  auto marked = [](const RootedTree& t) {
    Multigraph g = t.tree();
    const VertexId a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(t.root(), a);
    g.add_edge(a, b);
    g.add_edge(b, t.root());
    return g;
  };
  const auto trees = enumerate_rooted_trees(7);
  for (size_t i = 0; i < trees.size(); ++i) {
    for (size_t j = i + 1; j < trees.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(marked(trees[i]), marked(trees[j])));
    }
  }
}

TEST(FamilyFTest, EnumerationIsMembersOnly) {
  const auto f = enumerate_family_f(13);
  EXPECT_FALSE(f.empty());
  for (const auto& t : f) {
    EXPECT_LE(t.tree().num_vertices(), 13);
    EXPECT_NE(family_f_class(t), FamilyFClass::kNotMember);
  }
}

TEST(FamilySpecTest, Parses) {
  EXPECT_EQ(parse_family_spec("path:4"), path_graph(4));
  EXPECT_EQ(parse_family_spec("cycle:1"), cycle_graph(1));
  EXPECT_EQ(parse_family_spec("spider:1,2"), spider_graph({1, 2}));
  EXPECT_EQ(parse_family_spec("corona:path:3"), corona(path_graph(3)));
  EXPECT_EQ(parse_family_spec("k2s:3"), k2s(3));
  EXPECT_THROW(parse_family_spec("path"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec("path:x"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec("blob:3"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec("spider:1,"), std::invalid_argument);
}

}  // namespace
}  // namespace dtdp
