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

#ifndef DTDP_DOMINATION_H_
#define DTDP_DOMINATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtdp/multigraph.h"

namespace dtdp {

// Disjoint sets with D dominating and T totally dominating. Both lists are
// kept sorted. Vertices in neither set are allowed.
struct DtPair {
  std::vector<VertexId> D;
  std::vector<VertexId> T;

  friend bool operator==(const DtPair&, const DtPair&) = default;
  friend auto operator<=>(const DtPair&, const DtPair&) = default;
};

bool is_dominating(const Multigraph& g, std::span<const VertexId> d);
// Every vertex, members of T included, needs a neighbour in T; a loop makes a
// vertex its own neighbour.
bool is_total_dominating(const Multigraph& g, std::span<const VertexId> t);
bool is_dt_pair(const Multigraph& g, const DtPair& pair);

// Backtracking search. Vertices are tried in order of decreasing degree (ties
// by id); leaves are forced into D and supports into T. Disconnected graphs
// are solved one component at a time. The returned pair covers V (D = V \ T).
std::optional<DtPair> find_dt_pair(const Multigraph& g);
bool is_dtdp(const Multigraph& g);

struct EnumerateOptions {
  std::optional<std::size_t> limit;
  // Only pairs with D = V \ T.
  bool covering_only = false;
};

// All DT-pairs in a fixed order (each vertex tried as D, then T, then free).
std::vector<DtPair> enumerate_dt_pairs(const Multigraph& g,
                                       const EnumerateOptions& options = {});

// Bitmask helpers for graphs with at most 64 vertices.
using VertexMask = std::uint64_t;
// Open neighbourhoods as masks; a loop sets the vertex's own bit.
std::vector<VertexMask> neighbor_masks(const Multigraph& g);
std::vector<VertexId> mask_to_vertices(VertexMask mask);

}  // namespace dtdp

#endif  // DTDP_DOMINATION_H_
