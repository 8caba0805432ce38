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

#ifndef DTDP_GOODSUB_H_
#define DTDP_GOODSUB_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtdp/multigraph.h"

namespace dtdp {

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// H with the edges of E replaced by arcs.
struct OrientedView {
  Multigraph base;
  std::map<EdgeId, Arc> arcs;  // keys form E

  std::vector<EdgeId> oriented_edges() const;
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  // Vertices that start no arc (the vertex set of H_0).
  std::vector<VertexId> h0_vertices() const;
};

// A subgraph Q (given by its edges) with an orientation and, for each vertex
// of Q, a family of arc-disjoint paths starting there. A path is a list of
// edge ids; closed walks back to the start (1-cycles, 2-cycles) are paths.
struct GoodCertificate {
  std::vector<EdgeId> q;
  OrientedView view;
  std::map<VertexId, std::vector<std::vector<EdgeId>>> families;
};

enum class GoodViolation {
  kNone,
  kRange,       // E_Q^- must lie in E, and E must avoid E_Q
  kPaths,       // families are paths from their owner partitioning E
  kOutDegree,   // a vertex outside V_Q starts more than one arc
  kInDegree,    // d^-(u) must stay below the degree of u in H - E(Q)
  kOverlap,     // two families leave a common vertex
};

const char* good_violation_name(GoodViolation v);

struct GoodCheck {
  bool ok = false;
  GoodViolation violation = GoodViolation::kNone;
  std::string detail;
};

// Vertices of Q: endpoints of its edges, sorted.
std::vector<VertexId> q_vertices(const Multigraph& h,
                                 std::span<const EdgeId> q);
// E_Q^-: edges outside Q with an endpoint in V_Q.
std::vector<EdgeId> q_boundary(const Multigraph& h, std::span<const EdgeId> q);

// Checks the range, path, out-degree, in-degree and overlap conditions in
// that order, reporting the first failure.
// Throws std::invalid_argument for ids that do not exist, arcs that do not
// match their edge, or an empty Q.
GoodCheck verify_good_certificate(const GoodCertificate& cert);

// When the loop e generates a good subgraph: H != C_1 and its vertex is not
// a support. H must be connected.
bool loop_generates_good(const Multigraph& h, EdgeId e);
// When the edge e generates a good subgraph: H is neither C_2 nor C_3 and
// neither end is a support. H must be connected.
bool edge_generates_good(const Multigraph& h, EdgeId e);

std::optional<GoodCertificate> loop_good_certificate(const Multigraph& h,
                                                     EdgeId e);
std::optional<GoodCertificate> edge_good_certificate(const Multigraph& h,
                                                     EdgeId e);

bool has_good_subgraph(const Multigraph& h);
// First loop generating a good subgraph, else the first such edge.
std::optional<EdgeId> good_generator(const Multigraph& h);

// Every v in I has 1 <= d_{H[I]}(v) < d_H(v), and every vertex of N(I) \ I
// has a neighbour outside I.
bool induced_good_condition(const Multigraph& h, std::span<const VertexId> i);

// Exhaustive search over E, orientations and path families. |E_H| <= 10.
std::optional<GoodCertificate> brute_force_good_search(
    const Multigraph& h, std::span<const EdgeId> q);

}  // namespace dtdp

#endif  // DTDP_GOODSUB_H_
