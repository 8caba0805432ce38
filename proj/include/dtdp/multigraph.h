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

#ifndef DTDP_MULTIGRAPH_H_
#define DTDP_MULTIGRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtdp {

using VertexId = int;
using EdgeId = int;

// Endpoints of an edge. A loop has u == v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A finite multigraph with identified edges. Parallel edges and loops are
// allowed. A loop contributes 2 to the degree of its vertex and puts the
// vertex into its own neighborhood.
//
// Edge ids are assigned densely by add_edge(). delete_edge() keeps every
// other id stable, so after a deletion the id range may contain holes; use
// edge_ids() or has_edge() when iterating.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  int num_vertices() const { return static_cast<int>(incident_.size()); }
  // Number of live edges (loops included).
  int num_edges() const { return live_edges_; }
  // One past the largest edge id ever issued.
  int edge_id_bound() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }
  bool has_edge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;
  bool is_loop(EdgeId e) const { return edge(e).is_loop(); }
  // The endpoint of `e` opposite to `v` (v itself for a loop).
  VertexId other_end(EdgeId e, VertexId v) const;

  // Live edge ids in increasing order.
  std::vector<EdgeId> edge_ids() const;
  // Every live edge incident with v, each loop listed once, increasing id.
  const std::vector<EdgeId>& incident(VertexId v) const;

  int degree(VertexId v) const;
  int loop_count(VertexId v) const;
  // Number of edges joining u and v; loops at u when u == v.
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const {
    return multiplicity(u, v) > 0;
  }

  // N(v), sorted. Contains v when v carries a loop.
  std::vector<VertexId> neighbors(VertexId v) const;
  // N[v], sorted.
  std::vector<VertexId> closed_neighborhood(VertexId v) const;
  // E(v): non-loop edges at v.
  std::vector<EdgeId> edges_at(VertexId v) const;
  // L(v): loops at v.
  std::vector<EdgeId> loops_at(VertexId v) const;
  // E(A, B): edges with one end in A and the other in B (A, B disjoint).
  std::vector<EdgeId> edges_between(std::span<const VertexId> a,
                                    std::span<const VertexId> b) const;

  bool is_leaf(VertexId v) const { return degree(v) == 1; }
  bool is_support(VertexId v) const;
  // L_G, S_G, S'_G (weak supports), S''_G (strong supports).
  std::vector<VertexId> leaves() const;
  std::vector<VertexId> supports() const;
  std::vector<VertexId> weak_supports() const;
  std::vector<VertexId> strong_supports() const;

  bool has_loops() const;
  bool is_simple() const;  // no loops and no parallel edges
  // An edge with a leaf endpoint.
  bool is_pendant(EdgeId e) const;

  // Same graph with every edge present and ids compacted to [0, m).
  Multigraph compacted() const;

 private:
  friend Multigraph delete_edge(const Multigraph& g, EdgeId e);

  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<char> alive_;
  std::vector<std::vector<EdgeId>> incident_;
  int live_edges_ = 0;
};

// Structural equality: same vertex count and same live edges under the same
// ids.
bool operator==(const Multigraph& a, const Multigraph& b);

// G - e. Vertex set and all other edge ids are unchanged.
Multigraph delete_edge(const Multigraph& g, EdgeId e);

// G + uv with the new edge taking the next free id.
Multigraph add_edge(const Multigraph& g, VertexId u, VertexId v);

// Maximal connected vertex sets, each sorted; ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
// Edge ids are renumbered in increasing order of the original ids.
Multigraph induced_subgraph(const Multigraph& g,
                            std::span<const VertexId> vertices);

// Bijection from the vertices of the first graph to the second.
struct IsoCertificate {
  std::vector<VertexId> map;
};

std::optional<IsoCertificate> are_isomorphic(const Multigraph& g1,
                                             const Multigraph& g2);

// Re-checks a claimed isomorphism by comparing all multiplicities.
bool verify_isomorphism(const Multigraph& g1, const Multigraph& g2,
                        const IsoCertificate& cert);

// Invariant that is equal on isomorphic graphs (stable colour refinement).
std::uint64_t invariant_hash(const Multigraph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Multigraph parse_mgf(const std::string& text);
std::string to_mgf(const Multigraph& g);

Multigraph from_graph6(const std::string& code);
std::string to_graph6(const Multigraph& g);

struct DtPair;
// Graphviz rendering. With a pair, D vertices are blue and T vertices red.
std::string to_dot(const Multigraph& g, const DtPair* pair = nullptr);

}  // namespace dtdp

#endif  // DTDP_MULTIGRAPH_H_
