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

#ifndef DTDP_SUBDIVISION_H_
#define DTDP_SUBDIVISION_H_

#include <map>
#include <vector>

#include "dtdp/domination.h"
#include "dtdp/multigraph.h"

namespace dtdp {

// One of the two vertices inserted into an edge of H, named by the edge and
// a side. For a non-loop edge {u, v} (stored with u < v) side 0 is the half
// next to u and side 1 the half next to v. For a loop both sides are anchored
// at the loop's vertex (slot 1 and slot 2).
struct HalfEdge {
  EdgeId edge = 0;
  int side = 0;

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Vertex of H the half-edge is attached to.
VertexId anchor(const Multigraph& h, HalfEdge half);
// Half of `e` attached to v (side 0 for a loop).
HalfEdge half_at(const Multigraph& h, EdgeId e, VertexId v);
// The other half of the same edge.
HalfEdge partner(HalfEdge half);
// All halves anchored at v, ordered by edge id then side.
std::vector<HalfEdge> halves_at(const Multigraph& h, VertexId v);

using Block = std::vector<HalfEdge>;

// P(v) for every vertex v of H: a partition of the halves anchored at v.
struct PartitionFamily {
  std::vector<std::vector<Block>> blocks;  // indexed by H vertex

  friend bool operator==(const PartitionFamily&, const PartitionFamily&) =
      default;
};

// Multiplicities for the leaves of S2(H, P), keyed by leaf vertex id of
// S2(H, P). Missing leaves default to 1.
using Theta = std::map<VertexId, int>;

// Every half in its own block.
PartitionFamily identity_partition(const Multigraph& h);

// Throws std::invalid_argument unless P partitions the halves at every vertex.
void validate_partition(const Multigraph& h, const PartitionFamily& p);

enum class VertexKind { kOld, kLeafCopy, kBlock };

struct VertexOrigin {
  VertexKind kind = VertexKind::kOld;
  // kOld: the H vertex. kLeafCopy: the S2(H, P) leaf that was copied.
  // kBlock: the anchor vertex.
  VertexId source = 0;
  // kLeafCopy: copy number (1 is the original leaf). kBlock: block index in
  // P(source).
  int index = 0;
};

struct SubdivisionLabels {
  std::vector<VertexId> old_vertices;  // Vo: H vertices and leaf copies
  std::vector<VertexId> new_vertices;  // Vn: contracted half-edge vertices
  std::vector<VertexOrigin> origin;    // per vertex of the constructed graph
  // Block vertex per half-edge, indexed by 2 * edge + side.
  std::vector<VertexId> half_vertex;
  // Edge between a block vertex and its anchor, per block vertex (-1 for
  // other vertices).
  std::vector<EdgeId> spoke_edge;
  // Edge joining the two halves of each H edge.
  std::vector<EdgeId> middle_edge;
};

struct Subdivision {
  Multigraph graph;
  SubdivisionLabels labels;
};

// S2(H): two new vertices inside every edge and loop. H must have no
// isolated vertices.
Subdivision s2(const Multigraph& h);

// S2(H, P, theta). Vertices 0..|V_H|-1 are the H vertices, followed by one
// vertex per block (in vertex then block order), followed by extra leaf
// copies. Spoke edges come first, then one middle edge per H edge, then the
// pendant edges of leaf copies.
Subdivision s2_full(const Multigraph& h, const PartitionFamily& p,
                    const Theta& theta = {});

// Leaves of S2(H, P) by vertex id, in the numbering used by s2_full.
std::vector<VertexId> s2_leaves(const Multigraph& h, const PartitionFamily& p);

enum class BlockClass { kSingleton, kFarParts, kTwinParts, kMixedIllegal };

const char* block_class_name(BlockClass c);

struct PartitionClassification {
  std::vector<std::vector<BlockClass>> blocks;  // parallel to P.blocks
  // No twin or mixed blocks.
  bool minimality_safe = true;
  // Some block holds both slots of a loop.
  bool loop_creating = false;
  bool has_mixed = false;
};

PartitionClassification classify_partition(const Multigraph& h,
                                           const PartitionFamily& p);

// (Vo, Vn).
DtPair canonical_dt_pair(const SubdivisionLabels& labels);

}  // namespace dtdp

#endif  // DTDP_SUBDIVISION_H_
