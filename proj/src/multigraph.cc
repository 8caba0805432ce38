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

#include <algorithm>
#include <numeric>
#include <string>

namespace dtdp {

Multigraph::Multigraph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  incident_.resize(num_vertices);
}

VertexId Multigraph::add_vertex() {
  incident_.emplace_back();
  return num_vertices() - 1;
}

void Multigraph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  const EdgeId id = edge_id_bound();
  edges_.push_back({std::min(u, v), std::max(u, v)});
  alive_.push_back(1);
  incident_[u].push_back(id);
  if (u != v) incident_[v].push_back(id);
  ++live_edges_;
  return id;
}

bool Multigraph::has_edge(EdgeId e) const {
  return e >= 0 && e < edge_id_bound() && alive_[e];
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (!has_edge(e)) {
    throw std::out_of_range("edge " + std::to_string(e) + " does not exist");
  }
  return edges_[e];
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("vertex not incident with edge");
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_id_bound(); ++e) {
    if (alive_[e]) ids.push_back(e);
  }
  return ids;
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
  check_vertex(v);
  return incident_[v];
}

int Multigraph::degree(VertexId v) const {
  int d = 0;
  for (EdgeId e : incident(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

int Multigraph::loop_count(VertexId v) const {
  int c = 0;
  for (EdgeId e : incident(v)) c += edges_[e].is_loop() ? 1 : 0;
  return c;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(v);
  int c = 0;
  for (EdgeId e : incident(u)) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) ++c;
  }
  return c;
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(other_end(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> Multigraph::closed_neighborhood(VertexId v) const {
  std::vector<VertexId> out = neighbors(v);
  if (!std::binary_search(out.begin(), out.end(), v)) {
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  }
  return out;
}

std::vector<EdgeId> Multigraph::edges_at(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(v)) {
    if (!edges_[e].is_loop()) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> Multigraph::loops_at(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(v)) {
    if (edges_[e].is_loop()) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> Multigraph::edges_between(
    std::span<const VertexId> a, std::span<const VertexId> b) const {
  std::vector<char> in_b(num_vertices(), 0);
  for (VertexId v : b) {
    check_vertex(v);
    in_b[v] = 1;
  }
  std::vector<EdgeId> out;
  for (VertexId u : a) {
    for (EdgeId e : incident(u)) {
      if (!edges_[e].is_loop() && in_b[other_end(e, u)]) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Multigraph::is_support(VertexId v) const {
  for (EdgeId e : incident(v)) {
    if (!edges_[e].is_loop() && is_leaf(other_end(e, v))) return true;
  }
  return false;
}

std::vector<VertexId> Multigraph::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Multigraph::supports() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (is_support(v)) out.push_back(v);
  }
  return out;
}

namespace {

int leaf_neighbor_count(const Multigraph& g, VertexId v) {
  int c = 0;
  for (EdgeId e : g.edges_at(v)) c += g.is_leaf(g.other_end(e, v)) ? 1 : 0;
  return c;
}

}  // namespace

std::vector<VertexId> Multigraph::weak_supports() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (leaf_neighbor_count(*this, v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Multigraph::strong_supports() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (leaf_neighbor_count(*this, v) >= 2) out.push_back(v);
  }
  return out;
}

bool Multigraph::has_loops() const {
  for (EdgeId e = 0; e < edge_id_bound(); ++e) {
    if (alive_[e] && edges_[e].is_loop()) return true;
  }
  return false;
}

bool Multigraph::is_simple() const {
  if (has_loops()) return false;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (static_cast<int>(neighbors(v).size()) != degree(v)) return false;
  }
  return true;
}

bool Multigraph::is_pendant(EdgeId e) const {
  const Edge& ed = edge(e);
  return !ed.is_loop() && (is_leaf(ed.u) || is_leaf(ed.v));
}

Multigraph Multigraph::compacted() const {
  Multigraph out(num_vertices());
  for (EdgeId e : edge_ids()) out.add_edge(edges_[e].u, edges_[e].v);
  return out;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  if (a.edge_ids() != b.edge_ids()) return false;
  for (EdgeId e : a.edge_ids()) {
    if (!(a.edge(e) == b.edge(e))) return false;
  }
  return true;
}

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  if (!g.has_edge(e)) {
    throw std::out_of_range("edge " + std::to_string(e) + " does not exist");
  }
  Multigraph out = g;
  out.alive_[e] = 0;
  --out.live_edges_;
  const Edge ed = g.edges_[e];
  for (VertexId v : {ed.u, ed.v}) {
    auto& inc = out.incident_[v];
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
  }
  return out;
}

Multigraph add_edge(const Multigraph& g, VertexId u, VertexId v) {
  Multigraph out = g;
  out.add_edge(u, v);
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.other_end(e, x);
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  return connected_components(g).size() <= 1;
}

Multigraph induced_subgraph(const Multigraph& g,
                            std::span<const VertexId> vertices) {
  std::vector<int> index(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!g.has_vertex(vertices[i])) throw std::out_of_range("bad vertex");
    index[vertices[i]] = i;
  }
  Multigraph out(static_cast<int>(vertices.size()));
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (index[ed.u] >= 0 && index[ed.v] >= 0) {
      out.add_edge(index[ed.u], index[ed.v]);
    }
  }
  return out;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace dtdp
