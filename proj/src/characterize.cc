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

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dtdp/minimality.h"

namespace dtdp {
namespace {

int half_index(HalfEdge h) { return 2 * h.edge + h.side; }

std::vector<char> mask_of(int n, const std::vector<VertexId>& s) {
  std::vector<char> in(n, 0);
  for (VertexId v : s) in[v] = 1;
  return in;
}

bool is_cycle(const Multigraph& g) {
  if (!g.is_simple() || !is_connected(g)) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// Reconstruction of (H, P, theta) from one covering DT-pair.
std::optional<Decomposition> decompose_with(const Multigraph& g,
                                            const DtPair& pair) {
  const int n = g.num_vertices();
  auto in_t = mask_of(n, pair.T);
  for (VertexId x : pair.D) {
    for (EdgeId e : g.incident(x)) {
      if (!in_t[g.other_end(e, x)]) return std::nullopt;  // D not independent
    }
  }
  // Merge leaf copies: a T vertex with several D neighbours must see only
  // leaves there; the smallest one stays.
  std::vector<char> dropped(n, 0);
  std::map<VertexId, int> copies;  // kept leaf -> count
  std::vector<VertexId> owner(n, -1);  // T vertex -> its D neighbour
  for (VertexId x : pair.T) {
    std::vector<VertexId> dn;
    bool inner = false;
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other_end(e, x);
      if (in_t[y]) inner = true;
      else dn.push_back(y);
    }
    if (!inner || dn.empty()) return std::nullopt;
    std::sort(dn.begin(), dn.end());
    if (dn.size() > 1) {
      for (VertexId y : dn) {
        if (!g.is_leaf(y)) return std::nullopt;
      }
      for (size_t i = 1; i < dn.size(); ++i) dropped[dn[i]] = 1;
      copies[dn[0]] = static_cast<int>(dn.size());
    }
    owner[x] = dn[0];
  }

  Decomposition dec;
  dec.pair = pair;
  std::vector<int> h_index(n, -1);
  std::vector<VertexId> h_vertices;
  for (VertexId x : pair.D) {
    if (dropped[x]) continue;
    h_index[x] = static_cast<int>(h_vertices.size());
    h_vertices.push_back(x);
  }
  Multigraph& h = dec.h;
  h = Multigraph(static_cast<int>(h_vertices.size()));
  // One block per T vertex, anchored at its D neighbour.
  std::vector<int> block_of(n, -1);
  dec.p.blocks.resize(h_vertices.size());
  for (VertexId x : pair.T) {
    auto& blocks = dec.p.blocks[h_index[owner[x]]];
    block_of[x] = static_cast<int>(blocks.size());
    blocks.emplace_back();
  }
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (!in_t[ed.u] || !in_t[ed.v]) continue;
    const int a = h_index[owner[ed.u]];
    const int b = h_index[owner[ed.v]];
    const EdgeId he = h.add_edge(a, b);
    if (ed.is_loop()) {
      dec.p.blocks[a][block_of[ed.u]].push_back({he, 0});
      dec.p.blocks[a][block_of[ed.u]].push_back({he, 1});
    } else if (a == b) {
      dec.p.blocks[a][block_of[ed.u]].push_back({he, 0});
      dec.p.blocks[a][block_of[ed.v]].push_back({he, 1});
    } else {
      dec.p.blocks[a][block_of[ed.u]].push_back(half_at(h, he, a));
      dec.p.blocks[b][block_of[ed.v]].push_back(half_at(h, he, b));
    }
  }
  for (VertexId a = 0; a < h.num_vertices(); ++a) {
    if (h.degree(a) == 0) return std::nullopt;
  }
  for (const auto& [leaf, count] : copies) dec.theta[h_index[leaf]] = count;
  Subdivision s = s2_full(h, dec.p, dec.theta);
  auto iso = are_isomorphic(s.graph, g);
  if (!iso) return std::nullopt;
  dec.iso = *iso;
  dec.labels = s.labels;
  auto remap = [&](std::vector<VertexId>& vs) {
    for (VertexId& v : vs) v = iso->map[v];
    std::sort(vs.begin(), vs.end());
  };
  remap(dec.labels.old_vertices);
  remap(dec.labels.new_vertices);
  std::vector<VertexOrigin> origin(n);
  for (VertexId v = 0; v < n; ++v) origin[iso->map[v]] = s.labels.origin[v];
  dec.labels.origin = std::move(origin);
  for (VertexId& v : dec.labels.half_vertex) {
    if (v >= 0) v = iso->map[v];
  }
  // Edge ids do not transfer through a vertex bijection.
  dec.labels.spoke_edge.clear();
  dec.labels.middle_edge.clear();
  return dec;
}

std::vector<Decomposition> decompositions(const Multigraph& g, bool first) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  std::vector<Decomposition> out;
  EnumerateOptions opts;
  opts.covering_only = true;
  for (const DtPair& pair : enumerate_dt_pairs(g, opts)) {
    if (auto d = decompose_with(g, pair)) {
      out.push_back(std::move(*d));
      if (first) break;
    }
  }
  return out;
}

// Why (H, P) falls outside the characterisation, or empty when it does not.
std::string characterization_gap(const Decomposition& d) {
  const Multigraph& h = d.h;
  if (h.num_vertices() < 2) return "H has order 1";
  for (EdgeId e : h.edge_ids()) {
    if (h.is_pendant(e)) continue;
    const Edge& ed = h.edge(e);
    if (!h.is_support(ed.u) && !h.is_support(ed.v)) {
      return "H has a good subgraph generated by edge " + std::to_string(e);
    }
  }
  const auto cls = classify_partition(h, d.p);
  for (const auto& per_vertex : cls.blocks) {
    for (BlockClass c : per_vertex) {
      if (c != BlockClass::kSingleton && c != BlockClass::kFarParts) {
        return std::string("P has a ") + block_class_name(c) + " block";
      }
    }
  }
  for (const auto& [leaf, k] : d.theta) {
    if (k < 1) return "theta is not positive";
  }
  return "";
}

void check_pair_or_throw(const Multigraph& g, const DtPair& pair) {
  if (!is_dt_pair(g, pair)) {
    throw std::logic_error("constructed pair is not a DT-pair");
  }
}

DtPair sorted_pair(const std::vector<char>& is_t) {
  DtPair p;
  for (VertexId v = 0; v < static_cast<VertexId>(is_t.size()); ++v) {
    (is_t[v] ? p.T : p.D).push_back(v);
  }
  return p;
}

// Deletion for a block of P joining a half of a non-pendant edge or loop
// with a half of another edge.
NonminimalWitness illegal_block_witness(const Multigraph& h,
                                        const PartitionFamily& p,
                                        const Subdivision& s, VertexId v,
                                        int block) {
  const Block& a = p.blocks[v][block];
  const auto& lab = s.labels;
  auto block_vertex_of = [&](HalfEdge x) { return lab.half_vertex[half_index(x)]; };
  auto block_of = [&](HalfEdge x) -> const Block& {
    const VertexId w = anchor(h, x);
    for (const Block& b : p.blocks[w]) {
      if (std::find(b.begin(), b.end(), x) != b.end()) return b;
    }
    throw std::logic_error("half-edge not in P");
  };
  NonminimalWitness w;
  w.host = s.graph;
  std::vector<char> is_t(s.graph.num_vertices(), 0);
  for (VertexId x : lab.new_vertices) is_t[x] = 1;

  std::optional<HalfEdge> edge_half, loop_half;
  for (HalfEdge x : a) {
    if (h.is_loop(x.edge)) {
      if (!loop_half) loop_half = x;
    } else if (!h.is_pendant(x.edge) && !edge_half) {
      edge_half = x;
    }
  }
  if (edge_half) {
    const HalfEdge far = partner(*edge_half);
    const Block& b = block_of(far);
    if (b.size() > 1) {
      w.removed_edges = {lab.middle_edge[edge_half->edge]};
      w.method = "illegal block: middle edge removed";
    } else {
      const VertexId bv = block_vertex_of(far);
      w.removed_edges = {lab.spoke_edge[bv]};
      is_t[bv] = 0;
      w.method = "illegal block: far spoke removed";
    }
  } else {
    const HalfEdge other = partner(*loop_half);
    const Block& b = block_of(other);
    if (&b == &a || b.size() > 1) {
      w.removed_edges = {lab.middle_edge[loop_half->edge]};
      w.method = "illegal block: loop middle edge removed";
    } else {
      const VertexId bv = block_vertex_of(other);
      w.removed_edges = {lab.spoke_edge[bv]};
      is_t[bv] = 0;
      w.method = "illegal block: loop spoke removed";
    }
  }
  w.subgraph = delete_edge(s.graph, w.removed_edges[0]);
  w.pair = sorted_pair(is_t);
  check_pair_or_throw(w.subgraph, w.pair);
  return w;
}

// Deletion driven by a good subgraph of H: cut the middle edge of every Q
// edge and, for the last arc of every path, the edge between the head-side
// inserted vertex and the head.
NonminimalWitness good_subgraph_witness(const Multigraph& h,
                                        const Subdivision& s,
                                        GoodCertificate cert) {
  const auto& lab = s.labels;
  const auto& arcs = cert.view.arcs;
  std::set<EdgeId> last_arcs;
  for (const auto& [owner, paths] : cert.families) {
    for (const auto& path : paths) last_arcs.insert(path.back());
  }
  const auto vq = q_vertices(h, cert.q);
  const int n = s.graph.num_vertices();
  std::vector<int> status(n, -1);  // 0 = D, 1 = T
  auto assign = [&](VertexId x, int st) {
    if (status[x] >= 0 && status[x] != st) {
      throw std::logic_error("conflicting status for a block vertex");
    }
    status[x] = st;
  };
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    const bool t = std::binary_search(vq.begin(), vq.end(), x) ||
                   cert.view.out_degree(x) > 0;
    assign(x, t ? 1 : 0);
  }
  NonminimalWitness w;
  w.host = s.graph;
  for (EdgeId e : h.edge_ids()) {
    const VertexId b0 = lab.half_vertex[half_index({e, 0})];
    const VertexId b1 = lab.half_vertex[half_index({e, 1})];
    if (std::binary_search(cert.q.begin(), cert.q.end(), e)) {
      w.removed_edges.push_back(lab.middle_edge[e]);
      assign(b0, 0);
      assign(b1, 0);
      continue;
    }
    auto it = arcs.find(e);
    if (it == arcs.end()) {
      assign(b0, 1);
      assign(b1, 1);
      continue;
    }
    HalfEdge tail_half, head_half;
    if (h.is_loop(e)) {
      tail_half = {e, 0};
      head_half = {e, 1};
    } else {
      tail_half = half_at(h, e, it->second.tail);
      head_half = half_at(h, e, it->second.head);
    }
    const VertexId tv = lab.half_vertex[half_index(tail_half)];
    const VertexId hv = lab.half_vertex[half_index(head_half)];
    assign(tv, 1);
    assign(hv, 0);
    if (last_arcs.count(e)) w.removed_edges.push_back(lab.spoke_edge[hv]);
  }
  for (VertexId x = 0; x < n; ++x) {
    if (status[x] < 0) {
      if (lab.origin[x].kind != VertexKind::kLeafCopy) {
        throw std::logic_error("vertex left without status");
      }
      status[x] = 0;
    }
  }
  std::sort(w.removed_edges.begin(), w.removed_edges.end());
  w.subgraph = s.graph;
  for (EdgeId e : w.removed_edges) w.subgraph = delete_edge(w.subgraph, e);
  std::vector<char> is_t(n);
  for (VertexId x = 0; x < n; ++x) is_t[x] = static_cast<char>(status[x]);
  w.pair = sorted_pair(is_t);
  w.method = "good subgraph";
  w.certificate = std::move(cert);
  check_pair_or_throw(w.subgraph, w.pair);
  return w;
}

}  // namespace

PairProperties check_pair_properties(const Multigraph& g,
                                      const DtPair& pair) {
  if (!is_dt_pair(g, pair)) throw std::invalid_argument("not a DT-pair");
  const int n = g.num_vertices();
  auto in_d = mask_of(n, pair.D);
  auto in_t = mask_of(n, pair.T);
  PairProperties r;
  auto note = [&](const std::string& s) {
    if (r.detail.empty()) r.detail = s;
  };

  // D independent (a loop counts as self-adjacency) and maximal.
  r.d_maximal_independent = true;
  for (VertexId x : pair.D) {
    for (VertexId y : g.neighbors(x)) {
      if (in_d[y]) {
        r.d_maximal_independent = false;
        note("independence: D vertices " + std::to_string(x) + " and " +
             std::to_string(y) + " are adjacent");
      }
    }
  }
  for (VertexId x = 0; x < n && r.d_maximal_independent; ++x) {
    if (in_d[x]) continue;
    bool dominated = false;
    for (VertexId y : g.neighbors(x)) dominated = dominated || in_d[y];
    const auto nx = g.neighbors(x);
    const bool self_loop = std::binary_search(nx.begin(), nx.end(), x);
    if (!dominated && !self_loop) {
      r.d_maximal_independent = false;
      note("independence: D is not maximal, " + std::to_string(x) + " can be added");
    }
  }

  // Components of G[T]: simple stars K_{1,k}, or one vertex with one
  // loop.
  Multigraph gt = induced_subgraph(g, pair.T);
  r.t_components_stars = true;
  std::vector<int> comp_size(gt.num_vertices(), 0);
  std::vector<int> comp_of(gt.num_vertices(), -1);
  const auto comps = connected_components(gt);
  for (size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    for (VertexId x : comp) {
      comp_of[x] = static_cast<int>(c);
      comp_size[x] = static_cast<int>(comp.size());
    }
    Multigraph sub = induced_subgraph(gt, comp);
    bool ok;
    if (comp.size() == 1) {
      ok = sub.num_edges() == 1 && sub.loop_count(0) == 1;
    } else {
      int centres = 0;
      for (VertexId x = 0; x < sub.num_vertices(); ++x) {
        centres += sub.degree(x) > 1 ? 1 : 0;
      }
      ok = sub.is_simple() &&
           sub.num_edges() == sub.num_vertices() - 1 && centres <= 1;
    }
    if (!ok) {
      r.t_components_stars = false;
      note("stars: component of G[T] containing " +
           std::to_string(pair.T[comp[0]]) + " is not a star");
    }
  }

  // Outside neighbours of T vertices.
  r.t_neighbor_condition = true;
  for (size_t i = 0; i < pair.T.size(); ++i) {
    const VertexId x = pair.T[i];
    std::vector<VertexId> out;
    for (VertexId y : g.neighbors(x)) {
      if (!in_t[y]) out.push_back(y);
    }
    bool all_leaves = !out.empty();
    for (VertexId y : out) all_leaves = all_leaves && g.is_leaf(y);
    const bool star_leaf = comp_size[i] >= 3 && gt.degree(i) == 1;
    bool ok = star_leaf ? all_leaves : (out.size() == 1 || all_leaves);
    if (!ok) {
      r.t_neighbor_condition = false;
      note("neighbours: T vertex " + std::to_string(x) + " violates the condition");
    }
  }
  return r;
}

std::optional<Decomposition> decompose_to_subdivision(const Multigraph& g) {
  auto all = decompositions(g, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<Decomposition> all_decompositions(const Multigraph& g) {
  return decompositions(g, false);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCycle369:
      return "cycle369";
    case Verdict::kSubdivision:
      return "subdivision";
    case Verdict::kNotMinimal:
      return "not_minimal";
  }
  return "?";
}

MinimalClassification classify_minimal(const Multigraph& g) {
  if (g.has_loops()) throw std::invalid_argument("graph has loops");
  if (g.num_vertices() < 3) throw std::invalid_argument("order below 3");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  MinimalClassification out;
  const int n = g.num_vertices();
  if (is_cycle(g) && (n == 3 || n == 6 || n == 9)) {
    out.verdict = Verdict::kCycle369;
  } else {
    auto decs = all_decompositions(g);
    if (decs.empty()) {
      out.reason = is_dtdp(g) ? "not a 2-subdivision graph" : "not a DTDP-graph";
    }
    for (auto& d : decs) {
      const std::string gap = characterization_gap(d);
      if (gap.empty()) {
        out.verdict = Verdict::kSubdivision;
        out.decomposition = std::move(d);
        out.reason.clear();
        break;
      }
      if (out.reason.empty()) out.reason = gap;
    }
  }
#ifndef NDEBUG
  if (is_minimal_dtdp(g).minimal != (out.verdict != Verdict::kNotMinimal)) {
    throw std::logic_error("characterisation disagrees with minimality test");
  }
#endif
  return out;
}

NonminimalWitness construct_nonminimal_witness(const Multigraph& h,
                                               const PartitionFamily& p,
                                               const Theta& theta) {
  if (!is_connected(h)) throw std::invalid_argument("H is disconnected");
  const auto cls = classify_partition(h, p);
  if (cls.loop_creating) {
    throw std::invalid_argument("P contracts twin parts of a loop");
  }
  const auto generator = good_generator(h);
  if (!generator) throw std::invalid_argument("H has no good subgraph");
  const Subdivision s = s2_full(h, p, theta);
  if (cls.has_mixed) {
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      for (size_t b = 0; b < cls.blocks[v].size(); ++b) {
        if (cls.blocks[v][b] == BlockClass::kMixedIllegal) {
          return illegal_block_witness(h, p, s, v, static_cast<int>(b));
        }
      }
    }
  }
  auto cert = h.is_loop(*generator) ? loop_good_certificate(h, *generator)
                                    : edge_good_certificate(h, *generator);
  if (!cert) throw std::logic_error("generator without certificate");
  return good_subgraph_witness(h, s, std::move(*cert));
}

}  // namespace dtdp
