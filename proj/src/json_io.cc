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

#include "dtdp/json_io.h"

#include <stdexcept>
#include <string>

namespace dtdp {
namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

Json origin_json(const VertexOrigin& o) {
  static const char* kKinds[] = {"old", "leaf_copy", "block"};
  return Json{{"kind", kKinds[static_cast<int>(o.kind)]},
              {"source", o.source},
              {"index", o.index}};
}

}  // namespace

Json to_json(const DtPair& pair) { return Json{{"D", pair.D}, {"T", pair.T}}; }

Json to_json(const PartitionFamily& p) {
  Json out = Json::array();
  for (const auto& blocks : p.blocks) {
    Json at = Json::array();
    for (const Block& b : blocks) {
      Json block = Json::array();
      for (HalfEdge x : b) block.push_back({x.edge, x.side});
      at.push_back(std::move(block));
    }
    out.push_back(std::move(at));
  }
  return out;
}

Json to_json(const Theta& theta) {
  Json out = Json::object();
  for (const auto& [leaf, k] : theta) out[std::to_string(leaf)] = k;
  return out;
}

Json to_json(const GoodCertificate& cert) {
  Json arcs = Json::array();
  for (const auto& [e, a] : cert.view.arcs) {
    arcs.push_back({{"edge", e}, {"tail", a.tail}, {"head", a.head}});
  }
  Json families = Json::object();
  for (const auto& [v, paths] : cert.families) {
    families[std::to_string(v)] = paths;
  }
  return Json{{"q", cert.q}, {"arcs", std::move(arcs)},
              {"families", std::move(families)}};
}

Json to_json(const Decomposition& d) {
  Json h_edges = Json::array();
  for (EdgeId e : d.h.edge_ids()) h_edges.push_back({d.h.edge(e).u, d.h.edge(e).v});
  Json origin = Json::array();
  for (const auto& o : d.labels.origin) origin.push_back(origin_json(o));
  return Json{{"h", {{"n", d.h.num_vertices()}, {"edges", std::move(h_edges)}}},
              {"partition", to_json(d.p)},
              {"theta", to_json(d.theta)},
              {"pair", to_json(d.pair)},
              {"iso", d.iso.map},
              {"old_vertices", d.labels.old_vertices},
              {"new_vertices", d.labels.new_vertices},
              {"origin", std::move(origin)}};
}

Json to_json(const SweepReport& r) {
  Json disc = Json::array();
  for (const auto& d : r.discrepancies) {
    disc.push_back({{"graph", d.graph}, {"expected", d.expected}, {"got", d.got}});
  }
  return Json{{"tag", r.tag},
              {"range", r.range},
              {"checked", r.checked},
              {"discrepancies", std::move(disc)},
              {"pass", r.pass()},
              {"wall_ms", r.wall_ms}};
}

PartitionFamily partition_from_json(const Multigraph& h, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != h.num_vertices()) {
    throw std::invalid_argument(
        "partition must be an array with one entry per vertex of H");
  }
  PartitionFamily p;
  const PartitionFamily id = identity_partition(h);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const Json& at = j[v];
    if (at.is_null()) {
      p.blocks.push_back(id.blocks[v]);
      continue;
    }
    if (!at.is_array()) throw std::invalid_argument("blocks must be arrays");
    std::vector<Block> blocks;
    for (const Json& b : at) {
      if (!b.is_array()) throw std::invalid_argument("a block must be an array");
      Block block;
      for (const Json& x : b) {
        if (!x.is_array() || x.size() != 2) {
          throw std::invalid_argument("a half-edge is [edge, side]");
        }
        const int side = as_int(x[1], "side");
        if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
        block.push_back({as_int(x[0], "edge"), side});
      }
      blocks.push_back(std::move(block));
    }
    p.blocks.push_back(std::move(blocks));
  }
  validate_partition(h, p);
  return p;
}

Theta theta_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("theta must be an object");
  Theta theta;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int leaf = -1;
    try {
      leaf = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || leaf < 0) {
      throw std::invalid_argument("theta key '" + key + "' is not a vertex id");
    }
    theta[leaf] = as_int(value, "theta value");
  }
  return theta;
}

SweepReport report_from_json(const Json& j) {
  try {
    SweepReport r;
    r.tag = j.at("tag").get<std::string>();
    r.range = j.at("range").get<std::string>();
    r.checked = j.at("checked").get<std::int64_t>();
    for (const Json& d : j.at("discrepancies")) {
      r.discrepancies.push_back({d.at("graph").get<std::string>(),
                                 d.at("expected").get<std::string>(),
                                 d.at("got").get<std::string>()});
    }
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace dtdp
