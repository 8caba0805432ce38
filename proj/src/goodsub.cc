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

#include "dtdp/goodsub.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace dtdp {
namespace {

bool contains(std::span<const EdgeId> s, EdgeId e) {
  return std::find(s.begin(), s.end(), e) != s.end();
}

bool is_c1(const Multigraph& h) {
  return h.num_vertices() == 1 && h.num_edges() == 1;
}

bool is_c2(const Multigraph& h) {
  return h.num_vertices() == 2 && h.num_edges() == 2 && !h.has_loops();
}

bool is_c3(const Multigraph& h) {
  if (h.num_vertices() != 3 || h.num_edges() != 3 || !h.is_simple()) {
    return false;
  }
  return true;
}

// Degree of v in H - E(Q).
int free_degree(const Multigraph& h, std::span<const EdgeId> q, VertexId v) {
  int d = h.degree(v);
  for (EdgeId e : q) {
    const Edge& ed = h.edge(e);
    if (ed.is_loop()) {
      d -= ed.u == v ? 2 : 0;
    } else {
      d -= (ed.u == v) + (ed.v == v);
    }
  }
  return d;
}

GoodCheck fail(GoodViolation v, std::string detail) {
  return {false, v, std::move(detail)};
}

// Accumulates orientations and paths for the constructive certificates.
class Builder {
 public:
  Builder(const Multigraph& h, std::vector<EdgeId> q) {
    cert_.view.base = h;
    std::sort(q.begin(), q.end());
    cert_.q = std::move(q);
    for (VertexId v : q_vertices(h, cert_.q)) cert_.families[v];
  }

  void orient(EdgeId e, VertexId tail, VertexId head) {
    cert_.view.arcs[e] = {tail, head};
  }

  void path(VertexId owner, std::vector<EdgeId> edges) {
    cert_.families[owner].push_back(std::move(edges));
  }

  // Arc tail -> head on e, as a one-arc path owned by tail.
  void one_path(EdgeId e, VertexId tail, VertexId head) {
    orient(e, tail, head);
    path(tail, {e});
  }

  GoodCertificate take() { return std::move(cert_); }

 private:
  GoodCertificate cert_;
};

std::vector<EdgeId> edges_joining(const Multigraph& h, VertexId a, VertexId b) {
  std::vector<EdgeId> out;
  for (EdgeId e : h.incident(a)) {
    if (!h.is_loop(e) && h.other_end(e, a) == b) out.push_back(e);
  }
  return out;
}

// Loops at x become 1-cycles; edges to vertices with other neighbours point
// away from x; each vertex s whose only neighbour is x contributes a 2-cycle
// through its two smallest edges plus 1-paths for the rest. `skip` lists
// vertices handled elsewhere and `q_edges` are not touched.
void hub_rules(const Multigraph& h, Builder& b, VertexId x,
               const std::set<VertexId>& skip,
               std::span<const EdgeId> q_edges) {
  for (EdgeId l : h.loops_at(x)) {
    if (contains(q_edges, l)) continue;
    b.orient(l, x, x);
    b.path(x, {l});
  }
  std::set<VertexId> done;
  for (EdgeId f : h.edges_at(x)) {
    if (contains(q_edges, f)) continue;
    const VertexId s = h.other_end(f, x);
    if (skip.count(s) || done.count(s)) continue;
    const auto ns = h.neighbors(s);
    if (ns.size() == 1 && ns[0] == x) {
      done.insert(s);
      auto par = edges_joining(h, x, s);
      b.orient(par[0], s, x);
      b.orient(par[1], x, s);
      b.path(x, {par[1], par[0]});
      for (size_t i = 2; i < par.size(); ++i) b.one_path(par[i], x, s);
    } else {
      b.one_path(f, x, s);
    }
  }
}

}  // namespace

std::vector<EdgeId> OrientedView::oriented_edges() const {
  std::vector<EdgeId> out;
  for (const auto& [e, arc] : arcs) out.push_back(e);
  return out;
}

int OrientedView::out_degree(VertexId v) const {
  int d = 0;
  for (const auto& [e, arc] : arcs) d += arc.tail == v;
  return d;
}

int OrientedView::in_degree(VertexId v) const {
  int d = 0;
  for (const auto& [e, arc] : arcs) d += arc.head == v;
  return d;
}

std::vector<VertexId> OrientedView::h0_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < base.num_vertices(); ++v) {
    if (out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

const char* good_violation_name(GoodViolation v) {
  switch (v) {
    case GoodViolation::kNone:
      return "none";
    case GoodViolation::kRange:
      return "range";
    case GoodViolation::kPaths:
      return "paths";
    case GoodViolation::kOutDegree:
      return "out-degree";
    case GoodViolation::kInDegree:
      return "in-degree";
    case GoodViolation::kOverlap:
      return "overlap";
  }
  return "?";
}

std::vector<VertexId> q_vertices(const Multigraph& h,
                                 std::span<const EdgeId> q) {
  std::set<VertexId> s;
  for (EdgeId e : q) {
    s.insert(h.edge(e).u);
    s.insert(h.edge(e).v);
  }
  return {s.begin(), s.end()};
}

std::vector<EdgeId> q_boundary(const Multigraph& h, std::span<const EdgeId> q) {
  const auto vq = q_vertices(h, q);
  std::vector<EdgeId> out;
  for (EdgeId e : h.edge_ids()) {
    if (contains(q, e)) continue;
    const Edge& ed = h.edge(e);
    if (std::binary_search(vq.begin(), vq.end(), ed.u) ||
        std::binary_search(vq.begin(), vq.end(), ed.v)) {
      out.push_back(e);
    }
  }
  return out;
}

GoodCheck verify_good_certificate(const GoodCertificate& cert) {
  const Multigraph& h = cert.view.base;
  if (cert.q.empty()) throw std::invalid_argument("Q has no edges");
  for (EdgeId e : cert.q) {
    if (!h.has_edge(e)) throw std::invalid_argument("Q names a missing edge");
  }
  for (const auto& [e, arc] : cert.view.arcs) {
    if (!h.has_edge(e)) throw std::invalid_argument("arc on a missing edge");
    const Edge& ed = h.edge(e);
    if (!((arc.tail == ed.u && arc.head == ed.v) ||
          (arc.tail == ed.v && arc.head == ed.u))) {
      throw std::invalid_argument("arc endpoints do not match edge " +
                                  std::to_string(e));
    }
  }
  const auto vq = q_vertices(h, cert.q);
  auto in_vq = [&](VertexId v) {
    return std::binary_search(vq.begin(), vq.end(), v);
  };
  for (const auto& [owner, paths] : cert.families) {
    if (!h.has_vertex(owner)) throw std::invalid_argument("bad family owner");
    for (const auto& p : paths) {
      for (EdgeId e : p) {
        if (!h.has_edge(e)) throw std::invalid_argument("path names a missing edge");
      }
    }
  }

  // Range.
  for (EdgeId e : q_boundary(h, cert.q)) {
    if (!cert.view.arcs.count(e)) {
      return fail(GoodViolation::kRange,
                  "edge " + std::to_string(e) + " of E_Q^- is not oriented");
    }
  }
  for (EdgeId e : cert.q) {
    if (cert.view.arcs.count(e)) {
      return fail(GoodViolation::kRange,
                  "edge " + std::to_string(e) + " of Q is oriented");
    }
  }

  // Paths from their owners, arc-disjoint, covering every arc once.
  std::map<EdgeId, VertexId> owner_of;
  std::map<VertexId, std::map<VertexId, int>> fam_out;  // owner -> x -> d+
  std::map<VertexId, std::set<VertexId>> fam_vertices;
  for (const auto& [owner, paths] : cert.families) {
    if (!in_vq(owner)) {
      return fail(GoodViolation::kPaths,
                  "family owner " + std::to_string(owner) + " is not in Q");
    }
    for (const auto& p : paths) {
      if (p.empty()) return fail(GoodViolation::kPaths, "empty path");
      std::vector<VertexId> seen = {owner};
      VertexId cur = owner;
      for (size_t i = 0; i < p.size(); ++i) {
        const EdgeId e = p[i];
        auto it = cert.view.arcs.find(e);
        if (it == cert.view.arcs.end()) {
          return fail(GoodViolation::kPaths,
                      "path uses unoriented edge " + std::to_string(e));
        }
        if (!owner_of.emplace(e, owner).second) {
          return fail(GoodViolation::kPaths,
                      "arc " + std::to_string(e) + " used twice");
        }
        if (it->second.tail != cur) {
          return fail(GoodViolation::kPaths,
                      "path of " + std::to_string(owner) + " breaks at arc " +
                          std::to_string(e));
        }
        ++fam_out[owner][cur];
        cur = it->second.head;
        const bool closes = cur == owner && i + 1 == p.size();
        if (!closes && std::find(seen.begin(), seen.end(), cur) != seen.end()) {
          return fail(GoodViolation::kPaths,
                      "path of " + std::to_string(owner) + " repeats vertex " +
                          std::to_string(cur));
        }
        seen.push_back(cur);
      }
      fam_vertices[owner].insert(seen.begin(), seen.end());
    }
  }
  for (const auto& [e, arc] : cert.view.arcs) {
    if (!owner_of.count(e)) {
      return fail(GoodViolation::kPaths,
                  "arc " + std::to_string(e) + " is on no path");
    }
  }

  // Out-degree outside V_Q.
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (!in_vq(u) && cert.view.out_degree(u) > 1) {
      return fail(GoodViolation::kOutDegree,
                  "vertex " + std::to_string(u) + " starts several arcs");
    }
  }
  // In-degree against the degree in H - E(Q).
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (cert.view.in_degree(u) >= free_degree(h, cert.q, u)) {
      return fail(GoodViolation::kInDegree,
                  "vertex " + std::to_string(u) + " has too many in-arcs");
    }
  }
  // Families may share a vertex but not leave it together.
  for (auto a = fam_vertices.begin(); a != fam_vertices.end(); ++a) {
    for (auto b = std::next(a); b != fam_vertices.end(); ++b) {
      for (VertexId x : a->second) {
        if (!b->second.count(x)) continue;
        if (fam_out[a->first][x] > 0 && fam_out[b->first][x] > 0) {
          return fail(GoodViolation::kOverlap,
                      "families of " + std::to_string(a->first) + " and " +
                          std::to_string(b->first) + " both leave " +
                          std::to_string(x));
        }
      }
    }
  }
  return {true, GoodViolation::kNone, ""};
}

bool loop_generates_good(const Multigraph& h, EdgeId e) {
  if (!h.is_loop(e)) throw std::invalid_argument("edge is not a loop");
  return !is_c1(h) && !h.is_support(h.edge(e).u);
}

bool edge_generates_good(const Multigraph& h, EdgeId e) {
  if (h.is_loop(e)) throw std::invalid_argument("edge is a loop");
  const Edge& ed = h.edge(e);
  return !is_c2(h) && !is_c3(h) && !h.is_support(ed.u) && !h.is_support(ed.v);
}

std::optional<GoodCertificate> loop_good_certificate(const Multigraph& h,
                                                     EdgeId e) {
  if (!loop_generates_good(h, e)) return std::nullopt;
  const VertexId v = h.edge(e).u;
  Builder b(h, {e});
  const EdgeId q[] = {e};
  hub_rules(h, b, v, {}, q);
  return b.take();
}

std::optional<GoodCertificate> edge_good_certificate(const Multigraph& h,
                                                     EdgeId e) {
  if (!edge_generates_good(h, e)) return std::nullopt;
  VertexId v = h.edge(e).u;
  VertexId u = h.edge(e).v;
  const EdgeId q[] = {e};
  Builder b(h, {e});
  std::vector<EdgeId> par;  // E(v,u) \ {e}
  for (EdgeId f : edges_joining(h, v, u)) {
    if (f != e) par.push_back(f);
  }

  // Split the other neighbours of v and u.
  std::set<VertexId> z;  // N(x) = {v, u}
  std::set<VertexId> others;
  for (VertexId x : {v, u}) {
    for (VertexId y : h.neighbors(x)) {
      if (y == v || y == u) continue;
      const auto ny = h.neighbors(y);
      if (ny.size() == 2 && ny[0] == std::min(v, u) && ny[1] == std::max(v, u)) {
        z.insert(y);
      } else {
        others.insert(y);
      }
    }
  }

  if (z.empty() && others.empty()) {
    // H has order 2.
    const bool lv = h.loop_count(v) > 0;
    const bool lu = h.loop_count(u) > 0;
    for (VertexId x : {v, u}) {
      for (EdgeId l : h.loops_at(x)) b.one_path(l, x, x);
    }
    if (lv) {
      for (EdgeId f : par) b.one_path(f, u, v);
    } else if (lu) {
      for (EdgeId f : par) b.one_path(f, v, u);
    } else {
      b.one_path(par[0], v, u);
      for (size_t i = 1; i < par.size(); ++i) b.one_path(par[i], u, v);
    }
    return b.take();
  }

  auto has_out = [&](VertexId x) {
    if (h.loop_count(x) > 0) return true;
    for (VertexId y : h.neighbors(x)) {
      if (y != v && y != u && !z.count(y)) return true;
    }
    return false;
  };
  std::set<VertexId> skip = z;
  skip.insert(v);
  skip.insert(u);
  hub_rules(h, b, v, skip, q);
  hub_rules(h, b, u, skip, q);
  const bool out_v = has_out(v);
  const bool out_u = has_out(u);

  if (z.empty()) {
    if (out_v && out_u) {
      for (EdgeId f : par) b.one_path(f, u, v);
    } else {
      // One end has no arc yet; it is not a leaf, so par is nonempty.
      const VertexId a = out_v ? u : v;
      const VertexId c = a == v ? u : v;
      b.one_path(par[0], a, c);
      for (size_t i = 1; i < par.size(); ++i) b.one_path(par[i], c, a);
    }
    return b.take();
  }

  if (out_v || out_u) {
    const VertexId a = out_v ? v : u;  // already starts an arc
    const VertexId c = a == v ? u : v;
    for (VertexId y : z) {
      auto ea = edges_joining(h, y, a);
      auto ec = edges_joining(h, y, c);
      b.orient(ea[0], y, a);
      b.orient(ec[0], c, y);
      b.path(c, {ec[0], ea[0]});
      for (size_t i = 1; i < ea.size(); ++i) b.one_path(ea[i], a, y);
      for (size_t i = 1; i < ec.size(); ++i) b.one_path(ec[i], c, y);
    }
    for (EdgeId f : par) b.one_path(f, c, a);
    return b.take();
  }

  // Here V_H = {v, u} + Z.
  if (z.size() >= 2) {
    const VertexId vu[] = {v, u};
    const std::vector<VertexId> zs(z.begin(), z.end());
    const auto x_edges = h.edges_between(vu, zs);
    const size_t k = zs.size();
    // Minimum edge cover of {v, u} + Z inside E({v,u}, Z). Each edge covers
    // one vertex of Z, so covers have at least |Z| edges, and |Z| suffice.
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<EdgeId> cover;
    while (true) {
      std::set<VertexId> hit;
      for (size_t i : idx) {
        hit.insert(h.edge(x_edges[i]).u);
        hit.insert(h.edge(x_edges[i]).v);
      }
      if (hit.size() == k + 2) {
        for (size_t i : idx) cover.push_back(x_edges[i]);
        break;
      }
      size_t i = k;
      while (i > 0 && idx[i - 1] == x_edges.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (cover.empty()) throw std::logic_error("no edge cover of Z found");
    std::set<EdgeId> used;
    for (EdgeId f : cover) {
      const VertexId y = z.count(h.edge(f).u) ? h.edge(f).u : h.edge(f).v;
      const VertexId x = h.other_end(f, y);
      const VertexId w = x == v ? u : v;
      const EdgeId g = edges_joining(h, w, y)[0];
      b.orient(f, y, x);
      b.orient(g, w, y);
      b.path(w, {g, f});
      used.insert(f);
      used.insert(g);
    }
    for (EdgeId f : x_edges) {
      if (used.count(f)) continue;
      const VertexId y = z.count(h.edge(f).u) ? h.edge(f).u : h.edge(f).v;
      b.one_path(f, h.other_end(f, y), y);
    }
    for (EdgeId f : par) b.one_path(f, u, v);
    return b.take();
  }

  // |Z| = 1 and H is a triangle with some doubled edge. v must be able to
  // start an arc besides the 2-path, so it sees a doubled edge.
  const VertexId y = *z.begin();
  if (edges_joining(h, v, y).size() < 2 && par.empty()) std::swap(v, u);
  const auto evy = edges_joining(h, v, y);
  const auto euy = edges_joining(h, u, y);
  b.orient(evy[0], y, v);
  b.orient(euy[0], u, y);
  b.path(u, {euy[0], evy[0]});
  for (size_t i = 1; i < euy.size(); ++i) b.one_path(euy[i], u, y);
  for (size_t i = 1; i < evy.size(); ++i) b.one_path(evy[i], v, y);
  for (EdgeId f : par) b.one_path(f, v, u);
  return b.take();
}

bool has_good_subgraph(const Multigraph& h) {
  return good_generator(h).has_value();
}

std::optional<EdgeId> good_generator(const Multigraph& h) {
  for (EdgeId e : h.edge_ids()) {
    if (h.is_loop(e) && loop_generates_good(h, e)) return e;
  }
  for (EdgeId e : h.edge_ids()) {
    if (!h.is_loop(e) && edge_generates_good(h, e)) return e;
  }
  return std::nullopt;
}

bool induced_good_condition(const Multigraph& h, std::span<const VertexId> i) {
  std::vector<char> in(h.num_vertices(), 0);
  int count = 0;
  for (VertexId v : i) {
    if (!h.has_vertex(v)) throw std::out_of_range("vertex out of range");
    if (!in[v]) ++count;
    in[v] = 1;
  }
  if (count == 0 || count == h.num_vertices()) {
    throw std::invalid_argument("I must be a proper nonempty subset");
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (!in[v]) continue;
    int inner = 0;
    for (EdgeId e : h.incident(v)) {
      const VertexId w = h.other_end(e, v);
      if (in[w]) inner += w == v ? 2 : 1;
    }
    if (inner < 1 || inner >= h.degree(v)) return false;
  }
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    if (in[x]) continue;
    bool touches = false;
    bool escapes = false;
    for (VertexId w : h.neighbors(x)) {
      if (in[w]) touches = true;
      else escapes = true;
    }
    if (touches && !escapes) return false;
  }
  return true;
}

namespace {

// Exhaustive search state for brute_force_good_search.
class GoodSearch {
 public:
  GoodSearch(const Multigraph& h, std::span<const EdgeId> q)
      : h_(h), q_(q.begin(), q.end()) {
    std::sort(q_.begin(), q_.end());
    vq_ = q_vertices(h, q_);
    const auto boundary = q_boundary(h, q_);
    for (EdgeId e : h.edge_ids()) {
      if (contains(q_, e)) continue;
      rest_.push_back(e);
      forced_.push_back(contains(boundary, e));
    }
    const int n = h.num_vertices();
    in_vq_.assign(n, 0);
    for (VertexId v : vq_) in_vq_[v] = 1;
    free_deg_.resize(n);
    for (VertexId v = 0; v < n; ++v) free_deg_[v] = free_degree(h, q_, v);
    out_.assign(n, 0);
    in_.assign(n, 0);
    // Last position in rest_ touching each vertex, for early Q-vertex checks.
    last_touch_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(rest_.size()); ++i) {
      last_touch_[h.edge(rest_[i]).u] = i;
      last_touch_[h.edge(rest_[i]).v] = i;
    }
  }

  std::optional<GoodCertificate> run() {
    orient(0);
    return found_;
  }

 private:
  struct Path {
    VertexId owner;
    std::vector<int> arcs;  // indices into arcs_
    std::uint32_t mask;
  };

  void orient(int i) {
    if (found_) return;
    if (i == static_cast<int>(rest_.size())) {
      cover();
      return;
    }
    const EdgeId e = rest_[i];
    const Edge& ed = h_.edge(e);
    if (!forced_[i]) {
      if (settled(i)) orient(i + 1);
    }
    std::vector<Arc> options = {{ed.u, ed.v}};
    if (!ed.is_loop()) options.push_back({ed.v, ed.u});
    for (Arc a : options) {
      if (!in_vq_[a.tail] && out_[a.tail] >= 1) continue;         // out-degree
      if (in_[a.head] + 1 >= free_deg_[a.head]) continue;          // in-degree
      ++out_[a.tail];
      ++in_[a.head];
      arcs_.push_back({e, a});
      if (settled(i)) orient(i + 1);
      arcs_.pop_back();
      --out_[a.tail];
      --in_[a.head];
      if (found_) return;
    }
  }

  // Q vertices whose last non-Q edge is at position i need an out-arc.
  bool settled(int i) const {
    const Edge& ed = h_.edge(rest_[i]);
    for (VertexId x : {ed.u, ed.v}) {
      if (in_vq_[x] && last_touch_[x] == i && out_[x] == 0) return false;
    }
    return true;
  }

  void cover() {
    // Q vertices without any non-Q edge cannot satisfy the in-degree bound.
    for (VertexId v : vq_) {
      if (in_[v] >= free_deg_[v]) return;
    }
    paths_.clear();
    for (VertexId v : vq_) {
      std::vector<int> stack;
      std::vector<VertexId> visited = {v};
      grow(v, v, stack, visited, 0);
    }
    chosen_.clear();
    const std::uint32_t all =
        arcs_.size() == 32 ? ~0u : (1u << arcs_.size()) - 1;
    exact_cover(0, all);
  }

  void grow(VertexId owner, VertexId cur, std::vector<int>& stack,
            std::vector<VertexId>& visited, std::uint32_t mask) {
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
      if (mask >> a & 1) continue;
      const Arc& arc = arcs_[a].second;
      if (arc.tail != cur) continue;
      const bool closes = arc.head == owner;
      if (!closes && std::find(visited.begin(), visited.end(), arc.head) !=
                         visited.end()) {
        continue;
      }
      stack.push_back(a);
      paths_.push_back({owner, stack, mask | (1u << a)});
      if (!closes) {
        visited.push_back(arc.head);
        grow(owner, arc.head, stack, visited, mask | (1u << a));
        visited.pop_back();
      }
      stack.pop_back();
    }
  }

  void exact_cover(std::uint32_t covered, std::uint32_t all) {
    if (found_) return;
    if (covered == all) {
      if (overlap_ok()) found_ = build();
      return;
    }
    const int first = __builtin_ctz(~covered & all);
    for (size_t p = 0; p < paths_.size(); ++p) {
      const Path& path = paths_[p];
      if (!(path.mask >> first & 1) || (path.mask & covered)) continue;
      chosen_.push_back(p);
      exact_cover(covered | path.mask, all);
      chosen_.pop_back();
      if (found_) return;
    }
  }

  bool overlap_ok() const {
    std::map<VertexId, std::map<VertexId, int>> out;
    std::map<VertexId, std::set<VertexId>> verts;
    for (size_t p : chosen_) {
      const Path& path = paths_[p];
      verts[path.owner].insert(path.owner);
      for (int a : path.arcs) {
        const Arc& arc = arcs_[a].second;
        ++out[path.owner][arc.tail];
        verts[path.owner].insert(arc.head);
      }
    }
    for (auto a = verts.begin(); a != verts.end(); ++a) {
      for (auto b = std::next(a); b != verts.end(); ++b) {
        for (VertexId x : a->second) {
          if (b->second.count(x) && out[a->first][x] > 0 &&
              out[b->first][x] > 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  GoodCertificate build() const {
    GoodCertificate cert;
    cert.q = q_;
    cert.view.base = h_;
    for (const auto& [e, arc] : arcs_) cert.view.arcs[e] = arc;
    for (VertexId v : vq_) cert.families[v];
    for (size_t p : chosen_) {
      std::vector<EdgeId> edges;
      for (int a : paths_[p].arcs) edges.push_back(arcs_[a].first);
      cert.families[paths_[p].owner].push_back(std::move(edges));
    }
    return cert;
  }

  const Multigraph& h_;
  std::vector<EdgeId> q_;
  std::vector<VertexId> vq_;
  std::vector<EdgeId> rest_;
  std::vector<char> forced_;
  std::vector<char> in_vq_;
  std::vector<int> free_deg_;
  std::vector<int> out_;
  std::vector<int> in_;
  std::vector<int> last_touch_;
  std::vector<std::pair<EdgeId, Arc>> arcs_;
  std::vector<Path> paths_;
  std::vector<size_t> chosen_;
  std::optional<GoodCertificate> found_;
};

}  // namespace

std::optional<GoodCertificate> brute_force_good_search(
    const Multigraph& h, std::span<const EdgeId> q) {
  if (h.num_edges() > 10) throw std::invalid_argument("search needs m <= 10");
  if (q.empty()) throw std::invalid_argument("Q has no edges");
  for (EdgeId e : q) {
    if (!h.has_edge(e)) throw std::invalid_argument("Q names a missing edge");
  }
  GoodSearch search(h, q);
  return search.run();
}

}  // namespace dtdp
