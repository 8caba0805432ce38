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

#include "dtdp/families.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace dtdp {
namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

int parse_count(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad number '" + s + "' in family spec");
  }
  if (value > 100000) throw std::invalid_argument("family size too large");
  return value;
}

// Rooted trees as nested parenthesis strings; children sorted, so equal
// strings mean isomorphic rooted trees.
std::vector<std::vector<std::string>> rooted_codes(int max_n) {
  std::vector<std::vector<std::string>> by_size(max_n + 1);
  if (max_n >= 1) by_size[1] = {"()"};
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> out;
    // Choose children as a nonincreasing sequence of (size, index).
    std::vector<std::string> chosen;
    std::function<void(int, int, int)> rec = [&](int left, int max_size,
                                                 int max_index) {
      if (left == 0) {
        std::vector<std::string> kids = chosen;
        std::sort(kids.begin(), kids.end());
        std::string code = "(";
        for (const auto& k : kids) code += k;
        out.insert(code + ")");
        return;
      }
      for (int s = std::min(left, max_size); s >= 1; --s) {
        const int count = static_cast<int>(by_size[s].size());
        const int top = s == max_size ? max_index : count - 1;
        for (int i = top; i >= 0; --i) {
          chosen.push_back(by_size[s][i]);
          rec(left - s, s, i);
          chosen.pop_back();
        }
      }
    };
    rec(n - 1, n - 1, static_cast<int>(by_size[n - 1].size()) - 1);
    by_size[n].assign(out.begin(), out.end());
  }
  return by_size;
}

Multigraph from_code(const std::string& code) {
  Multigraph g;
  std::vector<VertexId> stack;
  for (char c : code) {
    if (c == '(') {
      VertexId v = g.add_vertex();
      if (!stack.empty()) g.add_edge(stack.back(), v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return g;
}

std::string encode(const Multigraph& t, VertexId v, VertexId parent) {
  std::vector<std::string> kids;
  for (VertexId u : t.neighbors(v)) {
    if (u != parent) kids.push_back(encode(t, u, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> bfs_distances(const Multigraph& g, VertexId root) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<VertexId> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

Multigraph path_graph(int n) {
  require_positive(n, "path order");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph cycle_graph(int n) {
  require_positive(n, "cycle order");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph complete_graph(int n) {
  require_positive(n, "complete graph order");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Multigraph star_graph(int k) {
  require_positive(k, "star size");
  Multigraph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

Multigraph k1s(int s) {
  if (s < 0) throw std::invalid_argument("negative loop count");
  Multigraph g(1);
  for (int i = 0; i < s; ++i) g.add_edge(0, 0);
  return g;
}

Multigraph k2s(int s) {
  if (s < 0) throw std::invalid_argument("negative edge count");
  Multigraph g(2);
  for (int i = 0; i < s; ++i) g.add_edge(0, 1);
  return g;
}

Multigraph spider_graph(const std::vector<int>& legs) {
  Multigraph g(1);
  for (int len : legs) {
    require_positive(len, "leg length");
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      VertexId v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

Multigraph corona(const Multigraph& h) {
  const int n = h.num_vertices();
  Multigraph g(2 * n);
  for (EdgeId e : h.edge_ids()) g.add_edge(h.edge(e).u, h.edge(e).v);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, v + n);
  return g;
}

ExpectedStatus expected_status(FamilyKind kind, int n) {
  require_positive(n, "order");
  auto in = [n](std::initializer_list<int> s) {
    return std::find(s.begin(), s.end(), n) != s.end();
  };
  switch (kind) {
    case FamilyKind::kPath:
      return {!in({1, 2, 3, 5, 6, 9}), in({4, 7, 10, 13})};
    case FamilyKind::kCycle:
      return {n >= 3 && n != 5, in({3, 6, 9})};
    case FamilyKind::kComplete:
      return {n >= 3, n == 3};
  }
  throw std::invalid_argument("unknown family");
}

RootedTree::RootedTree(Multigraph tree, VertexId root)
    : tree_(std::move(tree)), root_(root) {
  if (!tree_.has_vertex(root_)) throw std::invalid_argument("root not in tree");
  if (tree_.has_loops() || tree_.num_edges() != tree_.num_vertices() - 1 ||
      !is_connected(tree_)) {
    throw std::invalid_argument("not a tree");
  }
  dist_ = bfs_distances(tree_, root_);
}

std::vector<VertexId> RootedTree::tree_leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < tree_.num_vertices(); ++v) {
    if (tree_.degree(v) <= 1) out.push_back(v);
  }
  return out;
}

std::optional<int> sk_class(const RootedTree& t) {
  std::optional<int> k;
  for (VertexId x : t.tree_leaves()) {
    const int d = t.distance(x);
    if (k && *k != d) return std::nullopt;
    k = d;
  }
  return k;
}

const char* family_f_class_name(FamilyFClass c) {
  switch (c) {
    case FamilyFClass::kNotMember:
      return "not_member";
    case FamilyFClass::kMember:
      return "member";
    case FamilyFClass::kWoundedSpider:
      return "wounded_spider";
  }
  return "?";
}

FamilyFClass family_f_class(const RootedTree& t) {
  const Multigraph& g = t.tree();
  const VertexId r = t.root();
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (x != r && g.degree(x) > 2) return FamilyFClass::kNotMember;
  }
  int root_leaves = 0;
  for (VertexId x : g.neighbors(r)) root_leaves += g.is_leaf(x) ? 1 : 0;
  if (root_leaves < 1 || root_leaves > g.degree(r) - 1) {
    return FamilyFClass::kNotMember;
  }
  bool wounded = true;
  for (VertexId x : g.leaves()) {
    if (x == r || g.adjacent(x, r)) continue;
    if (t.distance(x) % 3 != 2) return FamilyFClass::kNotMember;
    wounded = wounded && t.distance(x) == 2;
  }
  return wounded ? FamilyFClass::kWoundedSpider : FamilyFClass::kMember;
}

std::vector<RootedTree> enumerate_rooted_trees(int n) {
  require_positive(n, "tree order");
  std::vector<RootedTree> out;
  const auto codes = rooted_codes(n);
  for (const auto& code : codes[n]) out.emplace_back(from_code(code), 0);
  return out;
}

std::vector<Multigraph> enumerate_free_trees(int n) {
  require_positive(n, "tree order");
  std::set<std::string> seen;
  std::vector<Multigraph> out;
  const auto codes = rooted_codes(n);
  for (const auto& code : codes[n]) {
    Multigraph t = from_code(code);
    // Centres by repeated leaf stripping.
    std::vector<int> deg(n);
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v) {
      deg[v] = t.degree(v);
      if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      std::vector<VertexId> next;
      for (VertexId v : layer) {
        --remaining;
        for (VertexId u : t.neighbors(v)) {
          if (--deg[u] == 1) next.push_back(u);
        }
      }
      layer = std::move(next);
    }
    std::string canon;
    for (VertexId c : layer) {
      std::string s = encode(t, c, -1);
      if (canon.empty() || s < canon) canon = s;
    }
    if (seen.insert(canon).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<RootedTree> enumerate_family_f(int max_n) {
  std::vector<RootedTree> out;
  // Legs of length 1 (at least one) plus a nonempty multiset of legs with
  // lengths = 2 (mod 3).
  std::vector<int> long_legs;
  std::function<void(int, int)> rec = [&](int budget, int min_len) {
    if (!long_legs.empty()) {
      for (int ones = 1; ones <= budget; ++ones) {
        std::vector<int> legs(ones, 1);
        legs.insert(legs.end(), long_legs.begin(), long_legs.end());
        out.emplace_back(spider_graph(legs), 0);
      }
    }
    for (int len = min_len; len <= budget - 1; len += 3) {
      long_legs.push_back(len);
      rec(budget - len, len);
      long_legs.pop_back();
    }
  };
  rec(max_n - 1, 2);
  return out;
}

Multigraph parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("family spec needs 'kind:args': " + spec);
  }
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "corona") return corona(parse_family_spec(arg));
  if (kind == "spider") {
    std::vector<int> legs;
    size_t start = 0;
    while (true) {
      size_t comma = arg.find(',', start);
      legs.push_back(parse_count(arg.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return spider_graph(legs);
  }
  const int n = parse_count(arg);
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "complete") return complete_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "k1s") return k1s(n);
  if (kind == "k2s") return k2s(n);
  throw std::invalid_argument("unknown family '" + kind + "'");
}

}  // namespace dtdp
