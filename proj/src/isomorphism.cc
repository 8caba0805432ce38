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

// Colour refinement followed by backtracking with multiplicity checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtdp/multigraph.h"

namespace dtdp {
namespace {

// Dense multiplicity matrix; the diagonal holds loop counts.
struct Matrix {
  int n = 0;
  std::vector<int> m;
  int at(int i, int j) const { return m[i * n + j]; }
};

Matrix to_matrix(const Multigraph& g) {
  Matrix mat;
  mat.n = g.num_vertices();
  mat.m.assign(static_cast<size_t>(mat.n) * mat.n, 0);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    ++mat.m[ed.u * mat.n + ed.v];
    if (!ed.is_loop()) ++mat.m[ed.v * mat.n + ed.u];
  }
  return mat;
}

void mix(std::uint64_t& h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
}

struct Refinement {
  std::vector<int> color;
  std::uint64_t hash = 0;
};

// Canonical colour refinement: colours are ranks of sorted signatures, so the
// result depends only on the isomorphism class.
Refinement refine(const Matrix& a) {
  const int n = a.n;
  Refinement r;
  r.hash = static_cast<std::uint64_t>(n);
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int u = 0; u < n; ++u) deg += (u == v ? 2 : 1) * a.at(v, u);
    sig[v] = {deg, a.at(v, v)};
  }
  int classes = 0;
  while (true) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> color(n);
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
        ++next;
        for (int x : sig[order[i]]) mix(r.hash, static_cast<std::uint64_t>(x));
        mix(r.hash, 0xabcdefULL);
      }
      color[order[i]] = next;
    }
    mix(r.hash, static_cast<std::uint64_t>(next));
    r.color = std::move(color);
    if (next + 1 == classes) break;
    classes = next + 1;
    for (int v = 0; v < n; ++v) {
      std::vector<int> s = {r.color[v]};
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u) {
        if (u != v && a.at(v, u) > 0) nb.emplace_back(r.color[u], a.at(v, u));
      }
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        s.push_back(c);
        s.push_back(m);
      }
      sig[v] = std::move(s);
    }
  }
  return r;
}

class Matcher {
 public:
  Matcher(const Matrix& a, const Matrix& b, const std::vector<int>& ca,
          const std::vector<int>& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb), n_(a.n) {
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    std::vector<int> class_size(n_ + 1, 0);
    for (int c : ca_) ++class_size[c];
    // Greedy order: prefer vertices tied to already ordered ones, then small
    // colour classes.
    std::vector<char> placed(n_, 0);
    std::vector<int> links(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[ca_[v]] < class_size[ca_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int u = 0; u < n_; ++u) {
        if (a_.at(best, u) > 0) ++links[u];
      }
    }
  }

  bool run() { return extend(0); }
  const std::vector<int>& map() const { return map_; }

 private:
  bool extend(int depth) {
    if (depth == n_) return true;
    const int x = order_[depth];
    // Restrict candidates to neighbours of the image of a mapped neighbour.
    int anchor = -1;
    for (int i = 0; i < depth; ++i) {
      if (a_.at(x, order_[i]) > 0) {
        anchor = order_[i];
        break;
      }
    }
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      if (anchor >= 0 && b_.at(map_[anchor], y) == 0) continue;
      if (b_.at(y, y) != a_.at(x, x)) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int w = order_[i];
        ok = a_.at(x, w) == b_.at(y, map_[w]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  const Matrix& a_;
  const Matrix& b_;
  const std::vector<int>& ca_;
  const std::vector<int>& cb_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::uint64_t invariant_hash(const Multigraph& g) {
  Matrix a = to_matrix(g);
  std::uint64_t h = refine(a).hash;
  mix(h, static_cast<std::uint64_t>(g.num_edges()));
  return h;
}

std::optional<IsoCertificate> are_isomorphic(const Multigraph& g1,
                                             const Multigraph& g2) {
  if (g1.num_vertices() != g2.num_vertices() ||
      g1.num_edges() != g2.num_edges()) {
    return std::nullopt;
  }
  Matrix a = to_matrix(g1);
  Matrix b = to_matrix(g2);
  Refinement ra = refine(a);
  Refinement rb = refine(b);
  if (ra.hash != rb.hash) return std::nullopt;
  Matcher matcher(a, b, ra.color, rb.color);
  if (!matcher.run()) return std::nullopt;
  return IsoCertificate{matcher.map()};
}

bool verify_isomorphism(const Multigraph& g1, const Multigraph& g2,
                        const IsoCertificate& cert) {
  const int n = g1.num_vertices();
  if (n != g2.num_vertices() || static_cast<int>(cert.map.size()) != n) {
    return false;
  }
  std::vector<char> hit(n, 0);
  for (int v : cert.map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  if (g1.num_edges() != g2.num_edges()) return false;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u; v < n; ++v) {
      if (g1.multiplicity(u, v) != g2.multiplicity(cert.map[u], cert.map[v])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace dtdp
