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

#ifndef DTDP_MINIMALITY_H_
#define DTDP_MINIMALITY_H_

#include <optional>

#include "dtdp/domination.h"
#include "dtdp/multigraph.h"

namespace dtdp {

struct MinimalityResult {
  bool minimal = false;
  bool dtdp = false;
  // Set when G is DTDP but some G - e is too.
  std::optional<EdgeId> witness_edge;
  std::optional<DtPair> witness_pair;
};

// Single-deletion test: G is minimal iff G is DTDP and no G - e is. Edges
// are tried in increasing id order. Throws on disconnected input.
MinimalityResult is_minimal_dtdp(const Multigraph& g);

// Definition-level check over every proper edge subset. Uses its own
// exhaustive DTDP test, independent of find_dt_pair. Requires m <= 16 and
// n <= 24.
bool brute_force_minimal_oracle(const Multigraph& g);

// Exhaustive DTDP test over all subsets T (D = V \ T); n <= 24.
bool exhaustive_is_dtdp(const Multigraph& g);

}  // namespace dtdp

#endif  // DTDP_MINIMALITY_H_
