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

#include "dtdp/catalog.h"

#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "dtdp/domination.h"
#include "dtdp/families.h"
#include "dtdp/json_io.h"
#include "oracles.h"

namespace dtdp {
namespace {

TEST(EnumerationTest, ConnectedCounts) {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    EXPECT_EQ(graphs.size(), static_cast<size_t>(expected[n - 1])) << n;
    for (const auto& g : graphs) {
      ASSERT_TRUE(is_connected(g));
      ASSERT_TRUE(g.is_simple());
    }
  }
  EXPECT_THROW(enumerate_connected_graphs(9), std::invalid_argument);
}

TEST(EnumerationTest, AllGraphCounts) {
  const int expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    int count = 0;
    for_each_graph(n, [&](const Multigraph& g) {
      EXPECT_EQ(g.num_vertices(), n);
      ++count;
    });
    EXPECT_EQ(count, expected[n - 1]) << n;
  }
}

// Classes counted by the oracle from canonical forms over all relabellings.
TEST(EnumerationTest, AgreesWithOracleCounts) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_connected_graphs(n).size()),
              oracle::count_classes(n, true));
    int all = 0;
    for_each_graph(n, [&](const Multigraph&) { ++all; });
    EXPECT_EQ(all, oracle::count_classes(n, false));
  }
}

TEST(EnumerationTest, DistinctRepresentatives) {
  const auto graphs = enumerate_connected_graphs(6);
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST(EnumerationTest, ConnectedMultigraphs) {
  // Connected multigraphs with m edges and no isolated vertices, m = 1..3.
  const auto one = enumerate_connected_multigraphs(1);
  EXPECT_EQ(one.size(), 2u);  // C1 and K2
  const auto upto3 = enumerate_connected_multigraphs(3);
  for (size_t i = 0; i < upto3.size(); ++i) {
    EXPECT_TRUE(is_connected(upto3[i]));
    for (size_t j = i + 1; j < upto3.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(upto3[i], upto3[j]));
    }
  }
  EXPECT_THROW(enumerate_connected_multigraphs(9), std::invalid_argument);
}

TEST(DomGgTest, Examples) {
  EXPECT_EQ(dom_gg_t(cycle_graph(5)), 0);
  EXPECT_EQ(dom_gg_t(cycle_graph(3)), 1);
  EXPECT_EQ(dom_gg_t(complete_graph(9)), 3);
  EXPECT_EQ(dom_gg_t(path_graph(4)), 1);
  EXPECT_THROW(dom_gg_t(path_graph(13)), std::invalid_argument);
}

TEST(DomGgPropertyTest, AgreesWithPartitionOracle) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 8, 4);
    const int k = dom_gg_t(g);
    EXPECT_EQ(k, oracle::dom_partition(g)) << to_mgf(g);
    EXPECT_EQ(k >= 1, oracle::is_dtdp(g)) << to_mgf(g);
  }
}

TEST(SweepTest, UnknownTagThrows) {
  EXPECT_THROW(run_sweep("no-such-sweep", 5), std::invalid_argument);
  EXPECT_THROW(run_sweep("characterization", 9), std::invalid_argument);
}

TEST(SweepTest, TagsAreListed) {
  const auto tags = suite_tags();
  EXPECT_EQ(tags.size(), 16u);
  EXPECT_NE(std::find(tags.begin(), tags.end(), "domgg-graphs"), tags.end());
}

// Reports are reproducible apart from timing, and threads do not change them.
TEST(SweepTest, ReproducibleAcrossRunsAndJobs) {
  for (const char* tag : {"canonical-pair", "characterization", "trees"}) {
    SweepReport a = run_sweep(tag, 6, 1);
    SweepReport b = run_sweep(tag, 6, 3);
    EXPECT_TRUE(a.pass());
    a.wall_ms = b.wall_ms = 0;
    EXPECT_EQ(to_json(a), to_json(b)) << tag;
  }
}

TEST(SweepTest, ReportJsonRoundTrip) {
  SweepReport r;
  r.tag = "paths";
  r.range = "n = 1..3";
  r.checked = 3;
  r.discrepancies.push_back({"2 1\n0 1\n", "dtdp=yes", "dtdp=no"});
  r.wall_ms = 1.5;
  const SweepReport back = report_from_json(to_json(r));
  EXPECT_EQ(back.tag, r.tag);
  EXPECT_EQ(back.checked, r.checked);
  EXPECT_EQ(back.discrepancies, r.discrepancies);
  EXPECT_FALSE(back.pass());
  EXPECT_THROW(report_from_json(Json::parse(R"({"tag":"x"})")),
               std::invalid_argument);
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(1000, 4, [&](int i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 2, [](int i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

}  // namespace
}  // namespace dtdp
