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

#ifndef DTDP_JSON_IO_H_
#define DTDP_JSON_IO_H_

#include "json.hpp"

#include "dtdp/catalog.h"
#include "dtdp/characterize.h"
#include "dtdp/domination.h"
#include "dtdp/goodsub.h"
#include "dtdp/subdivision.h"

namespace dtdp {

using Json = nlohmann::ordered_json;

Json to_json(const DtPair& pair);
Json to_json(const PartitionFamily& p);
Json to_json(const Theta& theta);
Json to_json(const GoodCertificate& cert);
Json to_json(const Decomposition& d);
Json to_json(const SweepReport& r);

// P as an array indexed by H vertex; each entry is a list of blocks, each
// block a list of [edge, side] pairs. A null entry stands for singleton
// blocks at that vertex. Throws std::invalid_argument on malformed input or
// when the result is not a partition family of h.
PartitionFamily partition_from_json(const Multigraph& h, const Json& j);
// {"<leaf id>": count, ...}
Theta theta_from_json(const Json& j);
SweepReport report_from_json(const Json& j);

}  // namespace dtdp

#endif  // DTDP_JSON_IO_H_
