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

#include "dtdp/minimality.h"

#include <cstdint>
#include <stdexcept>

#include "dtdp/budget.h"

namespace dtdp {
namespace {

// DTDP test on neighbourhood masks: some T totally dominates and its
// complement dominates. Covering pairs suffice since supersets of a
// dominating set dominate.
bool masks_dtdp(const std::vector<std::uint32_t>& nbr) {
  const int n = static_cast<int>(nbr.size());
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t t = 0;; ++t) {
    const std::uint32_t d = full & ~t;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((nbr[v] & t) == 0) ok = false;
      else if ((t >> v & 1) && (nbr[v] & d) == 0) ok = false;
    }
    if (ok) return true;
    if (t == full) return false;
  }
}

std::vector<std::uint32_t> masks_of(const Multigraph& g) {
  std::vector<std::uint32_t> nbr(g.num_vertices(), 0);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    nbr[ed.u] |= 1u << ed.v;
    nbr[ed.v] |= 1u << ed.u;
  }
  return nbr;
}

}  // namespace

MinimalityResult is_minimal_dtdp(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  SolverScope scope;
  MinimalityResult r;
  r.dtdp = is_dtdp(g);
  if (!r.dtdp) return r;
  for (EdgeId e : g.edge_ids()) {
    Multigraph h = delete_edge(g, e);
    if (auto pair = find_dt_pair(h)) {
      r.witness_edge = e;
      r.witness_pair = std::move(pair);
      return r;
    }
  }
  r.minimal = true;
  return r;
}

bool exhaustive_is_dtdp(const Multigraph& g) {
  if (g.num_vertices() > 24) throw std::invalid_argument("n > 24");
  return masks_dtdp(masks_of(g));
}

bool brute_force_minimal_oracle(const Multigraph& g) {
  if (g.num_edges() > 16) throw std::invalid_argument("oracle needs m <= 16");
  if (g.num_vertices() > 24) throw std::invalid_argument("oracle needs n <= 24");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  const auto ids = g.edge_ids();
  const int m = static_cast<int>(ids.size());
  const int n = g.num_vertices();
  if (!masks_dtdp(masks_of(g))) return false;
  const std::uint32_t all = (1u << m) - 1;
  // Larger subsets first: non-minimal graphs usually fail early.
  for (std::uint32_t keep = all; keep-- > 0;) {
    std::vector<std::uint32_t> nbr(n, 0);
    for (int i = 0; i < m; ++i) {
      if (keep >> i & 1) {
        const Edge& ed = g.edge(ids[i]);
        nbr[ed.u] |= 1u << ed.v;
        nbr[ed.v] |= 1u << ed.u;
      }
    }
    if (masks_dtdp(nbr)) return false;
  }
  return true;
}

}  // namespace dtdp
