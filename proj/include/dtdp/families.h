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

#ifndef DTDP_FAMILIES_H_
#define DTDP_FAMILIES_H_

#include <optional>
#include <string>
#include <vector>

#include "dtdp/multigraph.h"

namespace dtdp {

Multigraph path_graph(int n);
// C_1 is one vertex with a loop, C_2 two vertices joined by a double edge.
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
// K_{1,k}, centre 0.
Multigraph star_graph(int k);
// One vertex with s loops.
Multigraph k1s(int s);
// Two vertices with s parallel edges.
Multigraph k2s(int s);
// Centre 0 with one leg per entry; a leg of length l has l vertices.
Multigraph spider_graph(const std::vector<int>& legs);
// H o K_1: vertex v gets a new leaf v + |V_H|.
Multigraph corona(const Multigraph& h);

enum class FamilyKind { kPath, kCycle, kComplete };

struct ExpectedStatus {
  bool is_dtdp = false;
  bool is_minimal = false;
  friend bool operator==(const ExpectedStatus&, const ExpectedStatus&) =
      default;
};

// Known DTDP and minimality status of P_n, C_n and K_n.
ExpectedStatus expected_status(FamilyKind kind, int n);

class RootedTree {
 public:
  // Throws unless `tree` is a loop-free tree and root is one of its vertices.
  RootedTree(Multigraph tree, VertexId root);

  const Multigraph& tree() const { return tree_; }
  VertexId root() const { return root_; }
  int distance(VertexId v) const { return dist_.at(v); }
  // Leaves of the tree; the root counts only when it has degree <= 1.
  std::vector<VertexId> tree_leaves() const;

 private:
  Multigraph tree_;
  VertexId root_;
  std::vector<int> dist_;
};

// k such that every leaf lies at distance exactly k from the root.
std::optional<int> sk_class(const RootedTree& t);

enum class FamilyFClass { kNotMember, kMember, kWoundedSpider };
const char* family_f_class_name(FamilyFClass c);
FamilyFClass family_f_class(const RootedTree& t);

// All unlabeled rooted trees with n vertices (n >= 1).
std::vector<RootedTree> enumerate_rooted_trees(int n);
// All unlabeled free trees with n vertices (n >= 1).
std::vector<Multigraph> enumerate_free_trees(int n);
// Rooted spiders whose legs are 1 or = 2 (mod 3), with at least one leg of
// length 1 and at least two legs, on at most max_n vertices.
std::vector<RootedTree> enumerate_family_f(int max_n);

// Parses `path:N`, `cycle:N`, `complete:N`, `star:K`, `k1s:S`, `k2s:S`,
// `spider:a,b,c` and `corona:<spec>`. Throws std::invalid_argument.
Multigraph parse_family_spec(const std::string& spec);

}  // namespace dtdp

#endif  // DTDP_FAMILIES_H_
