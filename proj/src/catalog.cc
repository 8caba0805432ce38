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

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "dtdp/characterize.h"
#include "dtdp/domination.h"
#include "dtdp/families.h"
#include "dtdp/goodsub.h"
#include "dtdp/minimality.h"
#include "dtdp/subdivision.h"

namespace dtdp {
namespace {

constexpr int kMaxSmall = 9;

// Simple graph on at most 9 vertices as adjacency masks.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxSmall> adj{};
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Colour refinement started from (degree, triangles). Colours are ranks of
// sorted signatures, so they do not depend on the labelling.
void refine(const SmallGraph& g, std::array<std::uint32_t, kMaxSmall>& color,
            std::uint64_t* digest) {
  std::array<std::uint64_t, kMaxSmall> sig{};
  for (int v = 0; v < g.n; ++v) {
    int tri = 0;
    for (std::uint16_t rest = g.adj[v]; rest; rest &= rest - 1) {
      tri += std::popcount<std::uint16_t>(g.adj[v] & g.adj[std::countr_zero(rest)]);
    }
    sig[v] = mix(static_cast<std::uint64_t>(std::popcount(g.adj[v])) * 64 + tri);
  }
  int classes = 0;
  std::uint64_t acc = static_cast<std::uint64_t>(g.n);
  for (int round = 0; round <= g.n; ++round) {
    std::array<std::uint64_t, kMaxSmall> sorted = sig;
    std::sort(sorted.begin(), sorted.begin() + g.n);
    const int distinct = static_cast<int>(
        std::unique(sorted.begin(), sorted.begin() + g.n) - sorted.begin());
    for (int v = 0; v < g.n; ++v) {
      color[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.begin() + distinct, sig[v]) -
          sorted.begin());
    }
    for (int i = 0; i < distinct; ++i) acc = mix(acc ^ sorted[i]);
    if (distinct == classes) break;
    classes = distinct;
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t s = 0;
      for (std::uint16_t rest = g.adj[v]; rest; rest &= rest - 1) {
        s += mix(color[std::countr_zero(rest)] + 1);
      }
      sig[v] = mix(s ^ (static_cast<std::uint64_t>(color[v]) << 40));
    }
  }
  if (digest) {
    std::uint64_t count = 0;
    for (int v = 0; v < g.n; ++v) count += mix(sig[v]);
    *digest = mix(acc ^ count);
  }
}

class SmallMatcher {
 public:
  SmallMatcher(const SmallGraph& a, const SmallGraph& b) : a_(a), b_(b) {
    refine(a, ca_, nullptr);
    refine(b, cb_, nullptr);
  }

  bool run() {
    if (a_.n != b_.n) return false;
    std::array<int, kMaxSmall> hist{};
    for (int v = 0; v < a_.n; ++v) {
      ++hist[ca_[v]];
      --hist[cb_[v]];
    }
    for (int c : hist) {
      if (c != 0) return false;
    }
    // Order: next vertex has most mapped neighbours, then smallest colour.
    std::uint16_t placed = 0;
    for (int k = 0; k < a_.n; ++k) {
      int best = -1, best_links = -1;
      for (int v = 0; v < a_.n; ++v) {
        if (placed >> v & 1) continue;
        const int links = std::popcount<std::uint16_t>(a_.adj[v] & placed);
        if (links > best_links) best = v, best_links = links;
      }
      order_[k] = best;
      placed |= static_cast<std::uint16_t>(1u << best);
    }
    map_.fill(-1);
    return extend(0, 0);
  }

 private:
  bool extend(int k, std::uint16_t used) {
    if (k == a_.n) return true;
    const int v = order_[k];
    for (int w = 0; w < b_.n; ++w) {
      if ((used >> w & 1) || cb_[w] != ca_[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int x = order_[j];
        ok = ((a_.adj[v] >> x) & 1) == ((b_.adj[w] >> map_[x]) & 1);
      }
      if (!ok) continue;
      map_[v] = w;
      if (extend(k + 1, used | static_cast<std::uint16_t>(1u << w))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const SmallGraph& a_;
  const SmallGraph& b_;
  std::array<std::uint32_t, kMaxSmall> ca_{}, cb_{};
  std::array<int, kMaxSmall> order_{}, map_{};
};

// Insertion-ordered set of graphs up to isomorphism.
class SmallStore {
 public:
  void add(const SmallGraph& g) {
    std::array<std::uint32_t, kMaxSmall> color;
    std::uint64_t h = 0;
    refine(g, color, &h);
    auto& bucket = buckets_[h];
    for (std::uint32_t i : bucket) {
      if (SmallMatcher(items_[i], g).run()) return;
    }
    bucket.push_back(static_cast<std::uint32_t>(items_.size()));
    items_.push_back(g);
  }
  std::vector<SmallGraph>& items() { return items_; }

 private:
  std::vector<SmallGraph> items_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

// Graphs on n vertices from those on n - 1 by adding a vertex joined to a
// subset (nonempty when `connected`).
std::vector<SmallGraph> small_graphs(int n, bool connected) {
  std::vector<SmallGraph> level(1);
  level[0].n = 1;
  for (int k = 2; k <= n; ++k) {
    SmallStore store;
    for (const SmallGraph& base : level) {
      for (std::uint32_t s = connected ? 1 : 0; s < (1u << (k - 1)); ++s) {
        SmallGraph g = base;
        g.n = k;
        g.adj[k - 1] = static_cast<std::uint16_t>(s);
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
          g.adj[std::countr_zero(rest)] |= static_cast<std::uint16_t>(1u << (k - 1));
        }
        store.add(g);
      }
    }
    level = std::move(store.items());
  }
  return level;
}

Multigraph to_multigraph(const SmallGraph& s) {
  Multigraph g(s.n);
  for (int u = 0; u < s.n; ++u) {
    for (int v = u + 1; v < s.n; ++v) {
      if (s.adj[u] >> v & 1) g.add_edge(u, v);
    }
  }
  return g;
}

class MultiStore {
 public:
  void add(Multigraph g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (std::size_t i : bucket) {
      if (are_isomorphic(items_[i], g)) return;
    }
    bucket.push_back(items_.size());
    items_.push_back(std::move(g));
  }
  std::vector<Multigraph>& items() { return items_; }

 private:
  std::vector<Multigraph> items_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string status_string(bool dtdp, bool minimal) {
  return "dtdp=" + yes_no(dtdp) + " minimal=" + yes_no(minimal);
}

// Per-case results gathered in case order so reports do not depend on
// scheduling.
struct CaseResult {
  std::int64_t checked = 0;
  std::vector<Discrepancy> found;

  void expect(const Multigraph& g, const std::string& expected,
              const std::string& got) {
    ++checked;
    if (expected != got) found.push_back({to_mgf(g), expected, got});
  }
};

template <typename Case, typename Check>
void run_cases(SweepReport& report, const std::vector<Case>& cases, int jobs,
               Check check) {
  std::vector<CaseResult> results(cases.size());
  parallel_for(static_cast<int>(cases.size()), jobs,
               [&](int i) { check(cases[i], results[i]); });
  for (auto& r : results) {
    report.checked += r.checked;
    for (auto& d : r.found) report.discrepancies.push_back(std::move(d));
  }
}

void family_sweep(SweepReport& r, FamilyKind kind, int lo, int hi, int jobs) {
  std::vector<int> orders;
  for (int n = lo; n <= hi; ++n) orders.push_back(n);
  r.range = std::to_string(lo) + " <= n <= " + std::to_string(hi);
  run_cases(r, orders, jobs, [kind](int n, CaseResult& out) {
    Multigraph g = kind == FamilyKind::kPath    ? path_graph(n)
                   : kind == FamilyKind::kCycle ? cycle_graph(n)
                                                : complete_graph(n);
    const ExpectedStatus e = expected_status(kind, n);
    const MinimalityResult m = is_minimal_dtdp(g);
    out.expect(g, status_string(e.is_dtdp, e.is_minimal),
               status_string(m.dtdp, m.minimal));
  });
}

void corona_sweep(SweepReport& r, int jobs) {
  r.range = "connected simple H, 1 <= n <= 5; H = C1";
  std::vector<Multigraph> hs;
  for (int n = 1; n <= 5; ++n) {
    auto level = enumerate_connected_graphs(n);
    hs.insert(hs.end(), level.begin(), level.end());
  }
  run_cases(r, hs, jobs, [](const Multigraph& h, CaseResult& out) {
    const Multigraph g = corona(h);
    const int n = h.num_vertices();
    bool star = false;
    for (VertexId v = 0; v < n; ++v) star = star || h.degree(v) == n - 1;
    star = star && n >= 2 && h.num_edges() == n - 1;
    // corona(K1) = K2 has no DT-pair.
    const bool dtdp = n >= 2;
    const MinimalityResult m = is_minimal_dtdp(g);
    out.expect(g, status_string(dtdp, dtdp && star),
               status_string(m.dtdp, m.minimal));
  });
  CaseResult c1;
  const Multigraph g = corona(cycle_graph(1));
  const MinimalityResult m = is_minimal_dtdp(g);
  c1.expect(g, status_string(true, true), status_string(m.dtdp, m.minimal));
  r.checked += c1.checked;
  for (auto& d : c1.found) r.discrepancies.push_back(std::move(d));
}

void tree_sweep(SweepReport& r, int jobs) {
  r.range = "rooted trees 1 <= n <= 9 with all leaves at one depth k <= 3";
  std::vector<RootedTree> trees;
  for (int n = 1; n <= 9; ++n) {
    for (auto& t : enumerate_rooted_trees(n)) trees.push_back(std::move(t));
  }
  run_cases(r, trees, jobs, [](const RootedTree& t, CaseResult& out) {
    const auto k = sk_class(t);
    if (!k || *k > 3) return;
    const MinimalityResult m = is_minimal_dtdp(t.tree());
    if (*k <= 2) {
      out.expect(t.tree(), "dtdp=false", "dtdp=" + yes_no(m.dtdp));
    } else {
      out.expect(t.tree(), status_string(true, true),
                 status_string(m.dtdp, m.minimal));
    }
  });
}

void spider_sweep(SweepReport& r, int jobs) {
  r.range = "family F trees, n <= 13";
  auto trees = enumerate_family_f(13);
  run_cases(r, trees, jobs, [](const RootedTree& t, CaseResult& out) {
    const FamilyFClass c = family_f_class(t);
    if (c == FamilyFClass::kNotMember) {
      out.expect(t.tree(), "member", family_f_class_name(c));
      return;
    }
    if (c == FamilyFClass::kWoundedSpider) {
      const MinimalityResult m = is_minimal_dtdp(t.tree());
      out.expect(t.tree(), status_string(true, true),
                 status_string(m.dtdp, m.minimal));
    } else {
      out.expect(t.tree(), "dtdp=true", "dtdp=" + yes_no(is_dtdp(t.tree())));
    }
  });
}

Multigraph random_multigraph(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(1, n + 4)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Multigraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(pick(rng), pick(rng));
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) g.add_edge(v, pick(rng));
  }
  return g;
}

PartitionFamily random_partition(const Multigraph& h, std::mt19937_64& rng) {
  PartitionFamily p;
  p.blocks.resize(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    for (HalfEdge x : halves_at(h, v)) {
      auto& blocks = p.blocks[v];
      const int k = std::uniform_int_distribution<int>(
          0, static_cast<int>(blocks.size()))(rng);
      if (k == static_cast<int>(blocks.size())) blocks.emplace_back();
      blocks[k].push_back(x);
    }
  }
  return p;
}

Theta random_theta(const Multigraph& h, const PartitionFamily& p,
                   std::mt19937_64& rng) {
  Theta theta;
  for (VertexId leaf : s2_leaves(h, p)) {
    theta[leaf] = std::uniform_int_distribution<int>(1, 3)(rng);
  }
  return theta;
}

void canonical_pair_sweep(SweepReport& r) {
  r.range = "200 random multigraphs, n <= 8, seed 1";
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Multigraph h = random_multigraph(rng, 8);
    const PartitionFamily p = random_partition(h, rng);
    const Theta theta = random_theta(h, p, rng);
    const Subdivision s = s2_full(h, p, theta);
    CaseResult c;
    c.expect(h, "valid",
             is_dt_pair(s.graph, canonical_dt_pair(s.labels)) ? "valid"
                                                              : "invalid");
    r.checked += c.checked;
    for (auto& d : c.found) r.discrepancies.push_back(std::move(d));
  }
}

void subdivided_sweep(SweepReport& r, bool cycles, int jobs) {
  std::vector<int> sizes;
  for (int k = cycles ? 1 : 2; k <= (cycles ? 6 : 7); ++k) sizes.push_back(k);
  r.range = cycles ? "1 <= m <= 6" : "2 <= n <= 7";
  run_cases(r, sizes, jobs, [cycles](int k, CaseResult& out) {
    const Multigraph h = cycles ? cycle_graph(k) : path_graph(k);
    const bool expected = cycles ? k <= 3 : k <= 5;
    const Subdivision s = s2(h);
    out.expect(s.graph, "minimal=" + yes_no(expected),
               "minimal=" + yes_no(is_minimal_dtdp(s.graph).minimal));
  });
}

void good_subgraph_sweep(SweepReport& r, int jobs) {
  r.range = "connected multigraphs, 1 <= m <= 7";
  auto hs = enumerate_connected_multigraphs(7);
  run_cases(r, hs, jobs, [](const Multigraph& h, CaseResult& out) {
    for (EdgeId e : h.edge_ids()) {
      const bool loop = h.is_loop(e);
      const bool predicted =
          loop ? loop_generates_good(h, e) : edge_generates_good(h, e);
      const EdgeId q[] = {e};
      const bool found = brute_force_good_search(h, q).has_value();
      const std::string label = (loop ? "loop " : "edge ") + std::to_string(e);
      out.expect(h, label + " good=" + yes_no(found),
                 label + " good=" + yes_no(predicted));
      auto cert = loop ? loop_good_certificate(h, e) : edge_good_certificate(h, e);
      if (cert.has_value() != predicted) {
        out.expect(h, label + " certificate=" + yes_no(predicted),
                   label + " certificate=" + yes_no(cert.has_value()));
      } else if (cert) {
        const GoodCheck check = verify_good_certificate(*cert);
        out.expect(h, label + " certificate ok",
                   check.ok ? label + " certificate ok"
                            : label + " " + check.detail);
      }
    }
  });
}

struct WitnessCase {
  Multigraph h;
  PartitionFamily p;
  Theta theta;
};

void witness_sweep(SweepReport& r, int jobs) {
  r.range = "connected H with a good subgraph, 1 <= m <= 6; identity and "
            "random P, seed 7";
  std::mt19937_64 rng(7);
  std::vector<WitnessCase> cases;
  for (const Multigraph& h : enumerate_connected_multigraphs(6)) {
    if (!has_good_subgraph(h)) continue;
    const PartitionFamily id = identity_partition(h);
    cases.push_back({h, id, random_theta(h, id, rng)});
    for (int attempt = 0; attempt < 4; ++attempt) {
      PartitionFamily p = random_partition(h, rng);
      if (classify_partition(h, p).loop_creating || p == id) continue;
      cases.push_back({h, p, random_theta(h, p, rng)});
      break;
    }
  }
  run_cases(r, cases, jobs, [](const WitnessCase& c, CaseResult& out) {
    const Subdivision s = s2_full(c.h, c.p, c.theta);
    std::string got = "ok";
    try {
      const NonminimalWitness w = construct_nonminimal_witness(c.h, c.p, c.theta);
      Multigraph expect_sub = s.graph;
      for (EdgeId e : w.removed_edges) expect_sub = delete_edge(expect_sub, e);
      if (!(w.host == s.graph)) got = "host mismatch";
      else if (w.removed_edges.empty()) got = "no edge removed";
      else if (!(w.subgraph == expect_sub)) got = "subgraph mismatch";
      else if (!is_dt_pair(w.subgraph, w.pair)) got = "pair invalid";
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    out.expect(s.graph, "ok", got);
    out.expect(s.graph, "minimal=false",
               "minimal=" + yes_no(is_minimal_dtdp(s.graph).minimal));
  });
}

std::vector<Multigraph> graphs_between(int lo, int hi) {
  std::vector<Multigraph> out;
  for (int n = lo; n <= hi; ++n) {
    auto level = enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void characterization_sweep(SweepReport& r, int max_n, int jobs) {
  r.range = "connected simple graphs, 3 <= n <= " + std::to_string(max_n);
  run_cases(r, graphs_between(3, max_n), jobs,
            [](const Multigraph& g, CaseResult& out) {
              const bool by_structure =
                  classify_minimal(g).verdict != Verdict::kNotMinimal;
              const bool by_deletion = is_minimal_dtdp(g).minimal;
              std::string got = "structure=" + yes_no(by_structure) +
                                " deletion=" + yes_no(by_deletion);
              std::string expected = "structure=" + yes_no(by_deletion) +
                                     " deletion=" + yes_no(by_deletion);
              if (g.num_edges() <= 16) {
                const bool oracle = brute_force_minimal_oracle(g);
                got += " oracle=" + yes_no(oracle);
                expected += " oracle=" + yes_no(by_deletion);
              }
              out.expect(g, expected, got);
            });
}

int max_degree(const Multigraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

bool is_cycle(const Multigraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

void pair_properties_sweep(SweepReport& r, int max_n, int jobs) {
  r.range = "minimal connected simple graphs, 3 <= n <= " +
            std::to_string(max_n);
  run_cases(r, graphs_between(3, max_n), jobs,
            [](const Multigraph& g, CaseResult& out) {
              if (!is_minimal_dtdp(g).minimal) return;
              for (const DtPair& pair : enumerate_dt_pairs(g)) {
                const PairProperties pp = check_pair_properties(g, pair);
                out.expect(g, "properties hold",
                           pp.all() ? "properties hold" : pp.detail);
              }
              const auto d = decompose_to_subdivision(g);
              std::string got = "decomposed";
              if (!d) {
                got = "no decomposition";
              } else if (!verify_isomorphism(
                             s2_full(d->h, d->p, d->theta).graph, g, d->iso)) {
                got = "isomorphism does not verify";
              }
              out.expect(g, "decomposed", got);
              if (d && max_degree(d->h) >= 3 && !is_cycle(g)) {
                EnumerateOptions opts;
                opts.limit = 2;
                const size_t pairs = enumerate_dt_pairs(g, opts).size();
                out.expect(g, "pairs=1", "pairs=" + std::to_string(pairs));
              }
            });
}

void domgg_graph_sweep(SweepReport& r, int jobs) {
  r.range = "all simple graphs, 1 <= n <= 9";
  for (int n = 1; n <= 9; ++n) {
    std::vector<Multigraph> batch;
    auto flush = [&] {
      run_cases(r, batch, jobs, [](const Multigraph& g, CaseResult& out) {
        const int k = dom_gg_t(g);
        const int bound = g.num_vertices() / 3;
        out.expect(g, "at most " + std::to_string(bound),
                   k <= bound ? "at most " + std::to_string(bound)
                              : std::to_string(k));
      });
      batch.clear();
    };
    for_each_graph(n, [&](const Multigraph& g) {
      batch.push_back(g);
      if (batch.size() == 8192) flush();
    });
    flush();
  }
}

void domgg_tree_sweep(SweepReport& r, int jobs) {
  r.range = "trees, 1 <= n <= 11";
  std::vector<Multigraph> trees;
  for (int n = 1; n <= 11; ++n) {
    for (auto& t : enumerate_free_trees(n)) trees.push_back(std::move(t));
  }
  run_cases(r, trees, jobs, [](const Multigraph& g, CaseResult& out) {
    const int k = dom_gg_t(g);
    const int bound = g.num_vertices() / 4;
    out.expect(g, "at most " + std::to_string(bound),
               k <= bound ? "at most " + std::to_string(bound)
                          : std::to_string(k));
  });
}

void domgg_value_sweep(SweepReport& r) {
  r.range = "C5, C3, K9";
  CaseResult c;
  for (auto [g, k] : {std::pair{cycle_graph(5), 0}, std::pair{cycle_graph(3), 1},
                      std::pair{complete_graph(9), 3}}) {
    c.expect(g, std::to_string(k), std::to_string(dom_gg_t(g)));
  }
  r.checked = c.checked;
  r.discrepancies = std::move(c.found);
}

}  // namespace

std::vector<Multigraph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("order must be in [1, 8]");
  std::vector<Multigraph> out;
  for (const SmallGraph& s : small_graphs(n, true)) out.push_back(to_multigraph(s));
  return out;
}

void for_each_graph(int n, const std::function<void(const Multigraph&)>& visit) {
  if (n < 1 || n > 9) throw std::invalid_argument("order must be in [1, 9]");
  for (const SmallGraph& s : small_graphs(n, false)) visit(to_multigraph(s));
}

std::vector<Multigraph> enumerate_connected_multigraphs(int max_m) {
  if (max_m < 1 || max_m > 8) {
    throw std::invalid_argument("edge count must be in [1, 8]");
  }
  std::vector<Multigraph> level{Multigraph(1)};
  std::vector<Multigraph> out;
  for (int m = 1; m <= max_m; ++m) {
    MultiStore store;
    for (const Multigraph& g : level) {
      const int n = g.num_vertices();
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u; v < n; ++v) store.add(add_edge(g, u, v));
      }
      for (VertexId v = 0; v < n; ++v) {
        Multigraph h = g;
        h.add_edge(v, h.add_vertex());
        store.add(std::move(h));
      }
    }
    level = std::move(store.items());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int dom_gg_t(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("dom_gg_t needs at most 12 vertices");
  if (n == 0) return 0;
  const auto nb = neighbor_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  // td[X]: vertices with a neighbour in X.
  std::vector<std::uint16_t> td(full + 1, 0);
  for (std::uint32_t x = 1; x <= full; ++x) {
    td[x] = static_cast<std::uint16_t>(td[x & (x - 1)] | nb[std::countr_zero(x)]);
  }
  // Induced subgraph on S is DTDP iff some D in S dominates S and S \ D
  // totally dominates S.
  std::vector<char> dtdp(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    for (std::uint32_t d = s; d; d = (d - 1) & s) {
      const std::uint32_t t = s ^ d;
      if ((s & ~d & ~td[d]) == 0 && (s & ~td[t]) == 0) {
        dtdp[s] = 1;
        break;
      }
    }
  }
  // best[S]: most parts in a partition of S into DTDP-inducing sets.
  std::vector<std::int8_t> best(full + 1, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (dtdp[part] && best[s ^ part] >= 0) {
        best[s] = std::max<std::int8_t>(best[s], best[s ^ part] + 1);
      }
      if (sub == 0) break;
    }
  }
  return std::max<int>(0, best[full]);
}

std::vector<std::string> suite_tags() {
  return {"paths",
          "cycles",
          "complete",
          "corona",
          "trees",
          "spiders",
          "canonical-pair",
          "subdivided-cycles",
          "subdivided-paths",
          "good-subgraph",
          "nonminimal-witness",
          "characterization",
          "pair-properties",
          "domgg-graphs",
          "domgg-trees",
          "domgg-values"};
}

SweepReport run_sweep(const std::string& tag, int max_n, int jobs) {
  if (max_n < 3 || max_n > 8) throw std::invalid_argument("max_n must be in [3, 8]");
  const auto start = std::chrono::steady_clock::now();
  SweepReport r;
  r.tag = tag;
  if (tag == "paths") {
    family_sweep(r, FamilyKind::kPath, 1, 16, jobs);
  } else if (tag == "cycles") {
    family_sweep(r, FamilyKind::kCycle, 3, 12, jobs);
  } else if (tag == "complete") {
    family_sweep(r, FamilyKind::kComplete, 3, 7, jobs);
  } else if (tag == "corona") {
    corona_sweep(r, jobs);
  } else if (tag == "trees") {
    tree_sweep(r, jobs);
  } else if (tag == "spiders") {
    spider_sweep(r, jobs);
  } else if (tag == "canonical-pair") {
    canonical_pair_sweep(r);
  } else if (tag == "subdivided-cycles") {
    subdivided_sweep(r, true, jobs);
  } else if (tag == "subdivided-paths") {
    subdivided_sweep(r, false, jobs);
  } else if (tag == "good-subgraph") {
    good_subgraph_sweep(r, jobs);
  } else if (tag == "nonminimal-witness") {
    witness_sweep(r, jobs);
  } else if (tag == "characterization") {
    characterization_sweep(r, max_n, jobs);
  } else if (tag == "pair-properties") {
    pair_properties_sweep(r, max_n, jobs);
  } else if (tag == "domgg-graphs") {
    domgg_graph_sweep(r, jobs);
  } else if (tag == "domgg-trees") {
    domgg_tree_sweep(r, jobs);
  } else if (tag == "domgg-values") {
    domgg_value_sweep(r);
  } else {
    throw std::invalid_argument("unknown sweep tag '" + tag + "'");
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

std::vector<SweepReport> run_verification_suite(
    int max_n, std::span<const std::string> tags, int jobs,
    const std::function<void(const SweepReport&)>& on_report) {
  const auto all = suite_tags();
  std::vector<std::string> chosen(tags.begin(), tags.end());
  if (chosen.empty()) chosen = all;
  for (const auto& t : chosen) {
    if (std::find(all.begin(), all.end(), t) == all.end()) {
      throw std::invalid_argument("unknown sweep tag '" + t + "'");
    }
  }
  std::vector<SweepReport> out;
  for (const auto& t : chosen) {
    out.push_back(run_sweep(t, max_n, jobs));
    if (on_report) on_report(out.back());
  }
  return out;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& work) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dtdp
