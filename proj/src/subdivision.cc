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

#include "dtdp/subdivision.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dtdp {
namespace {

int half_index(HalfEdge h) { return 2 * h.edge + h.side; }

void require_no_isolated(const Multigraph& h) {
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) {
      throw std::invalid_argument("H has an isolated vertex " +
                                  std::to_string(v));
    }
  }
}

}  // namespace

VertexId anchor(const Multigraph& h, HalfEdge half) {
  const Edge& ed = h.edge(half.edge);
  if (half.side != 0 && half.side != 1) {
    throw std::invalid_argument("half-edge side must be 0 or 1");
  }
  return half.side == 0 ? ed.u : ed.v;
}

HalfEdge half_at(const Multigraph& h, EdgeId e, VertexId v) {
  const Edge& ed = h.edge(e);
  if (ed.u == v) return {e, 0};
  if (ed.v == v) return {e, 1};
  throw std::invalid_argument("vertex not incident with edge");
}

HalfEdge partner(HalfEdge half) { return {half.edge, 1 - half.side}; }

std::vector<HalfEdge> halves_at(const Multigraph& h, VertexId v) {
  std::vector<HalfEdge> out;
  for (EdgeId e : h.incident(v)) {
    if (h.is_loop(e)) {
      out.push_back({e, 0});
      out.push_back({e, 1});
    } else {
      out.push_back(half_at(h, e, v));
    }
  }
  return out;
}

PartitionFamily identity_partition(const Multigraph& h) {
  PartitionFamily p;
  p.blocks.resize(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    for (HalfEdge half : halves_at(h, v)) p.blocks[v].push_back({half});
  }
  return p;
}

void validate_partition(const Multigraph& h, const PartitionFamily& p) {
  if (static_cast<int>(p.blocks.size()) != h.num_vertices()) {
    throw std::invalid_argument("partition family must list every vertex");
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::set<HalfEdge> seen;
    for (const Block& block : p.blocks[v]) {
      if (block.empty()) throw std::invalid_argument("empty block");
      for (HalfEdge half : block) {
        if (!h.has_edge(half.edge)) {
          throw std::invalid_argument("block names a missing edge");
        }
        if (anchor(h, half) != v) {
          throw std::invalid_argument(
              "block at vertex " + std::to_string(v) +
              " holds a half-edge of another vertex");
        }
        if (!seen.insert(half).second) {
          throw std::invalid_argument("half-edge listed twice");
        }
      }
    }
    if (seen.size() != halves_at(h, v).size()) {
      throw std::invalid_argument("blocks at vertex " + std::to_string(v) +
                                  " do not cover its half-edges");
    }
  }
}

std::vector<VertexId> s2_leaves(const Multigraph& h,
                                const PartitionFamily& p) {
  // Block vertices have degree |A| + 1 >= 2; an H vertex is a leaf exactly
  // when P(v) has one block.
  std::vector<VertexId> out;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (p.blocks[v].size() == 1) out.push_back(v);
  }
  return out;
}

Subdivision s2_full(const Multigraph& h, const PartitionFamily& p,
                    const Theta& theta) {
  require_no_isolated(h);
  validate_partition(h, p);
  const auto leaves = s2_leaves(h, p);
  for (const auto& [leaf, k] : theta) {
    if (!std::binary_search(leaves.begin(), leaves.end(), leaf)) {
      throw std::invalid_argument("theta key " + std::to_string(leaf) +
                                  " is not a leaf of S2(H,P)");
    }
    if (k < 1) throw std::invalid_argument("theta values must be positive");
  }

  Subdivision out;
  Multigraph& g = out.graph;
  SubdivisionLabels& lab = out.labels;
  const int n = h.num_vertices();
  g = Multigraph(n);
  for (VertexId v = 0; v < n; ++v) {
    lab.old_vertices.push_back(v);
    lab.origin.push_back({VertexKind::kOld, v, 0});
  }
  lab.half_vertex.assign(2 * h.edge_id_bound(), -1);
  lab.middle_edge.assign(h.edge_id_bound(), -1);
  for (VertexId v = 0; v < n; ++v) {
    for (int b = 0; b < static_cast<int>(p.blocks[v].size()); ++b) {
      VertexId x = g.add_vertex();
      lab.new_vertices.push_back(x);
      lab.origin.push_back({VertexKind::kBlock, v, b});
      for (HalfEdge half : p.blocks[v][b]) lab.half_vertex[half_index(half)] = x;
    }
  }
  lab.spoke_edge.assign(g.num_vertices(), -1);
  for (VertexId x : lab.new_vertices) {
    lab.spoke_edge[x] = g.add_edge(lab.origin[x].source, x);
  }
  for (EdgeId e : h.edge_ids()) {
    lab.middle_edge[e] = g.add_edge(lab.half_vertex[half_index({e, 0})],
                                    lab.half_vertex[half_index({e, 1})]);
  }
  for (VertexId leaf : leaves) {
    auto it = theta.find(leaf);
    const int k = it == theta.end() ? 1 : it->second;
    const VertexId support = g.other_end(g.incident(leaf).front(), leaf);
    for (int i = 2; i <= k; ++i) {
      VertexId c = g.add_vertex();
      g.add_edge(support, c);
      lab.old_vertices.push_back(c);
      lab.origin.push_back({VertexKind::kLeafCopy, leaf, i});
    }
  }
  for (VertexId leaf : leaves) lab.origin[leaf].index = 1;
  lab.spoke_edge.resize(g.num_vertices(), -1);
  return out;
}

Subdivision s2(const Multigraph& h) {
  require_no_isolated(h);
  return s2_full(h, identity_partition(h));
}

const char* block_class_name(BlockClass c) {
  switch (c) {
    case BlockClass::kSingleton:
      return "SINGLETON";
    case BlockClass::kFarParts:
      return "FAR_PARTS";
    case BlockClass::kTwinParts:
      return "TWIN_PARTS";
    case BlockClass::kMixedIllegal:
      return "MIXED_ILLEGAL";
  }
  return "?";
}

PartitionClassification classify_partition(const Multigraph& h,
                                           const PartitionFamily& p) {
  validate_partition(h, p);
  PartitionClassification out;
  out.blocks.resize(p.blocks.size());
  for (size_t v = 0; v < p.blocks.size(); ++v) {
    for (const Block& block : p.blocks[v]) {
      BlockClass c;
      std::set<EdgeId> edges;
      bool all_pendant = true;
      for (HalfEdge half : block) {
        edges.insert(half.edge);
        all_pendant = all_pendant && h.is_pendant(half.edge);
      }
      if (block.size() == 1) {
        c = BlockClass::kSingleton;
      } else if (edges.size() == 1) {
        c = BlockClass::kTwinParts;  // both slots of one loop
      } else if (all_pendant) {
        c = BlockClass::kFarParts;
      } else {
        c = BlockClass::kMixedIllegal;
      }
      if (edges.size() < block.size()) out.loop_creating = true;
      if (c == BlockClass::kTwinParts || c == BlockClass::kMixedIllegal) {
        out.minimality_safe = false;
      }
      out.has_mixed = out.has_mixed || c == BlockClass::kMixedIllegal;
      out.blocks[v].push_back(c);
    }
  }
  return out;
}

DtPair canonical_dt_pair(const SubdivisionLabels& labels) {
  DtPair pair{labels.old_vertices, labels.new_vertices};
  std::sort(pair.D.begin(), pair.D.end());
  std::sort(pair.T.begin(), pair.T.end());
  return pair;
}

}  // namespace dtdp
