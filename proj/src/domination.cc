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

#include "dtdp/domination.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "dtdp/budget.h"

namespace dtdp {
namespace {

std::vector<char> membership(const Multigraph& g, std::span<const VertexId> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
    in[v] = 1;
  }
  return in;
}

bool single_bit(VertexMask m) { return m != 0 && (m & (m - 1)) == 0; }

enum class Mode { kCovering, kAll };

// Three-state search over one graph of at most 64 vertices. D and T hold the
// decided vertices; F holds vertices decided to be in neither set.
class PairSearch {
 public:
  PairSearch(const Multigraph& g, Mode mode)
      : n_(g.num_vertices()), mode_(mode), nbr_(neighbor_masks(g)) {
    full_ = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
    for (VertexId v = 0; v < n_; ++v) {
      if (g.is_leaf(v)) forced_d_ |= VertexMask{1} << v;
      if (g.is_support(v)) forced_t_ |= VertexMask{1} << v;
    }
  }

  // Calls `emit` for each pair in search order until it returns false.
  void run(const std::function<bool(VertexMask, VertexMask)>& emit) {
    emit_ = &emit;
    stop_ = false;
    if (forced_d_ & forced_t_) return;
    State s{forced_d_, forced_t_, 0};
    if (!propagate(s)) return;
    dfs(s);
  }

 private:
  struct State {
    VertexMask d, t, f;
    VertexMask assigned() const { return d | t | f; }
  };

  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      const VertexMask open = full_ & ~s.assigned();
      for (int v = 0; v < n_; ++v) {
        const VertexMask nb = nbr_[v];
        const VertexMask bit = VertexMask{1} << v;
        if ((nb & s.t) == 0) {
          const VertexMask cand = nb & open;
          if (cand == 0) return false;
          if (single_bit(cand)) {
            s.t |= cand;
            changed = true;
            break;
          }
        }
        if ((s.t | s.f) & bit && (nb & s.d) == 0) {
          const VertexMask cand = nb & open;
          if (cand == 0) return false;
          if (single_bit(cand)) {
            s.d |= cand;
            changed = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void dfs(const State& s) {
    if (stop_) return;
    check_budget();
    int pick = -1;
    for (int v : order_) {
      if (!(s.assigned() >> v & 1)) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      if (!(*emit_)(s.d, s.t)) stop_ = true;
      return;
    }
    const VertexMask bit = VertexMask{1} << pick;
    for (int choice = 0; choice < (mode_ == Mode::kAll ? 3 : 2); ++choice) {
      State next = s;
      if (choice == 0) next.d |= bit;
      if (choice == 1) next.t |= bit;
      if (choice == 2) next.f |= bit;
      if (propagate(next)) dfs(next);
      if (stop_) return;
    }
  }

  int n_;
  Mode mode_;
  std::vector<VertexMask> nbr_;
  VertexMask full_ = 0;
  VertexMask forced_d_ = 0;
  VertexMask forced_t_ = 0;
  std::vector<int> order_;
  const std::function<bool(VertexMask, VertexMask)>* emit_ = nullptr;
  bool stop_ = false;
};

void require_small(const Multigraph& g) {
  if (g.num_vertices() > 64) {
    throw std::invalid_argument("solver supports at most 64 vertices");
  }
}

}  // namespace

bool is_dominating(const Multigraph& g, std::span<const VertexId> d) {
  auto in = membership(g, d);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    bool hit = false;
    for (EdgeId e : g.incident(v)) hit = hit || in[g.other_end(e, v)];
    if (!hit) return false;
  }
  return true;
}

bool is_total_dominating(const Multigraph& g, std::span<const VertexId> t) {
  auto in = membership(g, t);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    bool hit = false;
    for (EdgeId e : g.incident(v)) hit = hit || in[g.other_end(e, v)];
    if (!hit) return false;
  }
  return true;
}

bool is_dt_pair(const Multigraph& g, const DtPair& pair) {
  auto in_d = membership(g, pair.D);
  for (VertexId v : pair.T) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
    if (in_d[v]) return false;
  }
  return is_dominating(g, pair.D) && is_total_dominating(g, pair.T);
}

std::vector<VertexMask> neighbor_masks(const Multigraph& g) {
  require_small(g);
  std::vector<VertexMask> nbr(g.num_vertices(), 0);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    nbr[ed.u] |= VertexMask{1} << ed.v;
    nbr[ed.v] |= VertexMask{1} << ed.u;
  }
  return nbr;
}

std::vector<VertexId> mask_to_vertices(VertexMask mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::optional<DtPair> find_dt_pair(const Multigraph& g) {
  SolverScope scope;
  DtPair result;
  for (const auto& comp : connected_components(g)) {
    Multigraph sub = induced_subgraph(g, comp);
    require_small(sub);
    std::optional<std::pair<VertexMask, VertexMask>> found;
    PairSearch search(sub, Mode::kCovering);
    search.run([&](VertexMask d, VertexMask t) {
      found.emplace(d, t);
      return false;
    });
    if (!found) return std::nullopt;
    for (VertexId v : mask_to_vertices(found->first)) result.D.push_back(comp[v]);
    for (VertexId v : mask_to_vertices(found->second)) result.T.push_back(comp[v]);
  }
  std::sort(result.D.begin(), result.D.end());
  std::sort(result.T.begin(), result.T.end());
  return result;
}

bool is_dtdp(const Multigraph& g) { return find_dt_pair(g).has_value(); }

std::vector<DtPair> enumerate_dt_pairs(const Multigraph& g,
                                       const EnumerateOptions& options) {
  SolverScope scope;
  require_small(g);
  std::vector<DtPair> out;
  if (options.limit && *options.limit == 0) return out;
  PairSearch search(g, options.covering_only ? Mode::kCovering : Mode::kAll);
  search.run([&](VertexMask d, VertexMask t) {
    out.push_back({mask_to_vertices(d), mask_to_vertices(t)});
    return !(options.limit && out.size() >= *options.limit);
  });
  return out;
}

}  // namespace dtdp
