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

#ifndef DTDP_CHARACTERIZE_H_
#define DTDP_CHARACTERIZE_H_

#include <optional>
#include <string>
#include <vector>

#include "dtdp/domination.h"
#include "dtdp/goodsub.h"
#include "dtdp/multigraph.h"
#include "dtdp/subdivision.h"

namespace dtdp {

// Structural properties of a DT-pair of a minimal DTDP-graph.
struct PairProperties {
  bool d_maximal_independent = false;
  bool t_components_stars = false;
  bool t_neighbor_condition = false;
  std::string detail;                  // first failure, if any

  bool all() const {
    return d_maximal_independent && t_components_stars &&
           t_neighbor_condition;
  }
};

// Throws std::invalid_argument when `pair` is not a DT-pair of g.
PairProperties check_pair_properties(const Multigraph& g,
                                      const DtPair& pair);

// G recognised as S2(H, P, theta).
struct Decomposition {
  Multigraph h;
  PartitionFamily p;
  Theta theta;
  // The DT-pair of G the reconstruction came from (D = V \ T).
  DtPair pair;
  // From the vertices of s2_full(h, p, theta) to the vertices of G.
  IsoCertificate iso;
  // Labels of s2_full(h, p, theta) with vertex ids mapped into G.
  SubdivisionLabels labels;
};

// Tries every covering DT-pair in enumeration order and returns the first
// one whose reconstruction is isomorphic to G. G must be connected.
std::optional<Decomposition> decompose_to_subdivision(const Multigraph& g);
// All successful decompositions, one per covering DT-pair.
std::vector<Decomposition> all_decompositions(const Multigraph& g);

enum class Verdict { kCycle369, kSubdivision, kNotMinimal };
const char* verdict_name(Verdict v);

struct MinimalClassification {
  Verdict verdict = Verdict::kNotMinimal;
  std::optional<Decomposition> decomposition;  // for kSubdivision
  std::string reason;                          // for kNotMinimal
};

// Characterisation of loop-free minimal DTDP-graphs: C3, C6, C9, or
// S2(H, P, theta) where every non-pendant edge of H meets a support of H and
// P contracts only far parts. Requires a connected loop-free graph of order
// at least 3.
MinimalClassification classify_minimal(const Multigraph& g);

struct NonminimalWitness {
  Multigraph host;        // S2(H, P, theta)
  Multigraph subgraph;    // host minus removed_edges, ids preserved
  std::vector<EdgeId> removed_edges;
  DtPair pair;            // DT-pair of subgraph
  std::string method;     // which construction was used
  std::optional<GoodCertificate> certificate;
};

// Proper spanning DTDP subgraph of S2(H, P, theta). Uses the good subgraph
// of H when P has only singleton and far-part blocks, and an illegal block
// of P otherwise. Throws when H has no good subgraph (and P no illegal
// block) or when P puts both slots of a loop into one block.
NonminimalWitness construct_nonminimal_witness(const Multigraph& h,
                                               const PartitionFamily& p,
                                               const Theta& theta = {});

}  // namespace dtdp

#endif  // DTDP_CHARACTERIZE_H_
