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

#ifndef DTDP_CATALOG_H_
#define DTDP_CATALOG_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dtdp/multigraph.h"

namespace dtdp {

// One representative per isomorphism class of connected simple graphs on n
// vertices, 1 <= n <= 8. Built by adding a vertex to the connected graphs on
// n - 1 vertices; the order is deterministic.
std::vector<Multigraph> enumerate_connected_graphs(int n);

// Every simple graph on n vertices up to isomorphism, 1 <= n <= 9, streamed
// to `visit` in a deterministic order.
void for_each_graph(int n, const std::function<void(const Multigraph&)>& visit);

// Connected multigraphs (loops and parallel edges allowed) with 1 <= m <=
// max_m edges and no isolated vertices, up to isomorphism. max_m <= 8.
std::vector<Multigraph> enumerate_connected_multigraphs(int max_m);

// Largest k such that V_G splits into k parts, each inducing a DTDP-graph;
// 0 when G is not DTDP. n <= 12.
int dom_gg_t(const Multigraph& g);

struct Discrepancy {
  std::string graph;  // MGF
  std::string expected;
  std::string got;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct SweepReport {
  std::string tag;
  std::string range;
  std::int64_t checked = 0;
  std::vector<Discrepancy> discrepancies;
  double wall_ms = 0;

  bool pass() const { return discrepancies.empty(); }
};

// Tags in the order run_verification_suite runs them.
std::vector<std::string> suite_tags();

// Runs one sweep. `max_n` bounds the order of the graphs in the
// "characterization" and "pair-properties" sweeps (3..max_n, max_n <= 8);
// other sweeps use fixed ranges. Throws std::invalid_argument for an unknown
// tag.
SweepReport run_sweep(const std::string& tag, int max_n, int jobs = 1);

// Runs the given tags (all when empty). Each report is handed to `on_report`
// as soon as it is finished.
std::vector<SweepReport> run_verification_suite(
    int max_n, std::span<const std::string> tags = {}, int jobs = 1,
    const std::function<void(const SweepReport&)>& on_report = nullptr);

// Calls work(i) for i in [0, count) on `jobs` threads. Exceptions from work
// are rethrown after all threads stop.
void parallel_for(int count, int jobs, const std::function<void(int)>& work);

}  // namespace dtdp

#endif  // DTDP_CATALOG_H_
