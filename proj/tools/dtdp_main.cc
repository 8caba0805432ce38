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

// dtdp: command-line front end. JSON goes to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 a yes/no answer was "no", 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dtdp/budget.h"
#include "dtdp/catalog.h"
#include "dtdp/characterize.h"
#include "dtdp/domination.h"
#include "dtdp/families.h"
#include "dtdp/goodsub.h"
#include "dtdp/json_io.h"
#include "dtdp/minimality.h"
#include "dtdp/multigraph.h"
#include "dtdp/subdivision.h"

namespace {

using dtdp::Json;
using dtdp::Multigraph;

// Input problems that map to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holding MGF or graph6 (told apart by the first data line), or an
// inline family spec such as path:5.
Multigraph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const std::string text = read_file(arg);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream toks(line);
      std::string first, second;
      if (!(toks >> first) || first[0] == '#') continue;
      if (toks >> second) return dtdp::parse_mgf(text);
      return dtdp::from_graph6(first);
    }
    throw UsageError("'" + arg + "' holds no graph");
  }
  if (arg.find(':') == std::string::npos) {
    throw UsageError("'" + arg + "' is neither a file nor a family spec");
  }
  return dtdp::parse_family_spec(arg);
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("bad JSON in '" + path + "': " + e.what());
  }
}

void write_dot(const std::string& path, const Multigraph& g,
               const dtdp::DtPair* pair) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << dtdp::to_dot(g, pair);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct PartitionArgs {
  std::string partition;
  std::string theta;

  dtdp::PartitionFamily partition_for(const Multigraph& h) const {
    return partition.empty() ? dtdp::identity_partition(h)
                             : dtdp::partition_from_json(h, load_json(partition));
  }
  dtdp::Theta theta_value() const {
    return theta.empty() ? dtdp::Theta{} : dtdp::theta_from_json(load_json(theta));
  }
};

Json optional_pair(const std::optional<dtdp::DtPair>& p) {
  return p ? dtdp::to_json(*p) : Json(nullptr);
}

int cmd_check(const Multigraph& g, const std::string& dot) {
  dtdp::EnumerateOptions opts;
  opts.limit = 2;
  opts.covering_only = true;
  const auto pair = dtdp::find_dt_pair(g);
  Json count = 0;
  if (pair) {
    const auto pairs = dtdp::enumerate_dt_pairs(g, opts);
    count = pairs.size() >= 2 ? Json("2+") : Json(pairs.size());
  }
  emit(Json{{"dtdp", pair.has_value()}, {"pair", optional_pair(pair)},
            {"count", count}});
  write_dot(dot, g, pair ? &*pair : nullptr);
  return pair ? 0 : 1;
}

int cmd_minimal(const Multigraph& g, const std::string& dot) {
  const auto r = dtdp::is_minimal_dtdp(g);
  Json j{{"minimal", r.minimal}, {"dtdp", r.dtdp}};
  j["witness_edge"] = r.witness_edge ? Json(*r.witness_edge) : Json(nullptr);
  j["witness_pair"] = optional_pair(r.witness_pair);
  emit(j);
  if (!dot.empty()) {
    if (r.witness_edge) {
      write_dot(dot, dtdp::delete_edge(g, *r.witness_edge), &*r.witness_pair);
    } else {
      const auto pair = dtdp::find_dt_pair(g);
      write_dot(dot, g, pair ? &*pair : nullptr);
    }
  }
  return r.minimal ? 0 : 1;
}

int cmd_pairs(const Multigraph& g, std::size_t limit, bool covering,
              const std::string& dot) {
  dtdp::EnumerateOptions opts;
  opts.limit = limit + 1;
  opts.covering_only = covering;
  auto pairs = dtdp::enumerate_dt_pairs(g, opts);
  const bool truncated = pairs.size() > limit;
  if (truncated) pairs.resize(limit);
  Json list = Json::array();
  for (const auto& p : pairs) list.push_back(dtdp::to_json(p));
  emit(Json{{"pairs", std::move(list)}, {"count", pairs.size()},
            {"truncated", truncated}});
  write_dot(dot, g, pairs.empty() ? nullptr : &pairs.front());
  return 0;
}

int cmd_s2(const Multigraph& h, const PartitionArgs& pa, const std::string& dot) {
  const auto p = pa.partition_for(h);
  const auto s = dtdp::s2_full(h, p, pa.theta_value());
  const auto pair = dtdp::canonical_dt_pair(s.labels);
  emit(Json{{"mgf", dtdp::to_mgf(s.graph)},
            {"n", s.graph.num_vertices()},
            {"m", s.graph.num_edges()},
            {"old_vertices", s.labels.old_vertices},
            {"new_vertices", s.labels.new_vertices},
            {"pair", dtdp::to_json(pair)}});
  write_dot(dot, s.graph, &pair);
  return 0;
}

int cmd_good(const Multigraph& h, std::optional<int> edge,
             std::optional<int> loop, bool exists) {
  if (static_cast<int>(edge.has_value()) + static_cast<int>(loop.has_value()) +
          static_cast<int>(exists) != 1) {
    throw UsageError("give exactly one of --edge, --loop, --exists");
  }
  if (!dtdp::is_connected(h)) throw UsageError("H must be connected");
  if (exists) {
    const auto gen = dtdp::good_generator(h);
    emit(Json{{"has_good_subgraph", gen.has_value()},
              {"generator", gen ? Json(*gen) : Json(nullptr)}});
    return gen ? 0 : 1;
  }
  const int e = edge ? *edge : *loop;
  if (!h.has_edge(e)) throw UsageError("no edge " + std::to_string(e));
  if (h.is_loop(e) != loop.has_value()) {
    throw UsageError(std::to_string(e) + (loop ? " is not a loop" : " is a loop"));
  }
  const auto cert = loop ? dtdp::loop_good_certificate(h, e)
                         : dtdp::edge_good_certificate(h, e);
  emit(Json{{"good", cert.has_value()},
            {"certificate", cert ? dtdp::to_json(*cert) : Json(nullptr)}});
  return cert ? 0 : 1;
}

int cmd_recognize(const Multigraph& g, const std::string& dot) {
  const auto c = dtdp::classify_minimal(g);
  const auto& d = c.decomposition;
  Json j{{"verdict", dtdp::verdict_name(c.verdict)},
         {"H", d ? Json(dtdp::to_mgf(d->h)) : Json(nullptr)},
         {"P", d ? dtdp::to_json(d->p) : Json(nullptr)},
         {"theta", d ? dtdp::to_json(d->theta) : Json(nullptr)},
         {"reason", c.reason.empty() ? Json(nullptr) : Json(c.reason)}};
  if (d) j["decomposition"] = dtdp::to_json(*d);
  emit(j);
  if (!dot.empty()) {
    const auto pair = c.decomposition ? std::optional(c.decomposition->pair)
                                      : dtdp::find_dt_pair(g);
    write_dot(dot, g, pair ? &*pair : nullptr);
  }
  return 0;
}

int cmd_witness(const Multigraph& h, const PartitionArgs& pa,
                const std::string& dot) {
  const auto w = dtdp::construct_nonminimal_witness(h, pa.partition_for(h),
                                                    pa.theta_value());
  Json j{{"method", w.method},
         {"host", dtdp::to_mgf(w.host)},
         {"removed_edges", w.removed_edges},
         {"subgraph", dtdp::to_mgf(w.subgraph)},
         {"pair", dtdp::to_json(w.pair)}};
  j["certificate"] = w.certificate ? dtdp::to_json(*w.certificate) : Json(nullptr);
  emit(j);
  write_dot(dot, w.subgraph, &w.pair);
  return 0;
}

int cmd_verify(int max_n, const std::vector<std::string>& tags, int jobs,
               const std::string& resume) {
  std::vector<std::string> chosen = tags.empty() ? dtdp::suite_tags() : tags;
  bool all_pass = true;
  std::ofstream log;
  if (!resume.empty()) {
    // Tags already recorded in the file are skipped.
    std::set<std::string> done;
    if (std::filesystem::exists(resume)) {
      std::istringstream in(read_file(resume));
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto r = dtdp::report_from_json(Json::parse(line));
        done.insert(r.tag);
        all_pass = all_pass && r.pass();
        std::cout << line << "\n";
      }
    }
    std::erase_if(chosen, [&](const std::string& t) { return done.count(t) > 0; });
    log.open(resume, std::ios::app);
    if (!log) throw UsageError("cannot write '" + resume + "'");
  }
  dtdp::run_verification_suite(max_n, chosen, jobs,
                               [&](const dtdp::SweepReport& r) {
                                 const std::string line = dtdp::to_json(r).dump();
                                 std::cout << line << "\n" << std::flush;
                                 if (log.is_open()) log << line << "\n" << std::flush;
                                 all_pass = all_pass && r.pass();
                               });
  return all_pass ? 0 : 1;
}

int cmd_convert(const Multigraph& g, const std::string& to) {
  if (to == "mgf") {
    std::cout << dtdp::to_mgf(g);
  } else if (to == "graph6") {
    std::cout << dtdp::to_graph6(g) << "\n";
  } else if (to == "dot") {
    std::cout << dtdp::to_dot(g);
  } else {
    throw UsageError("unknown format '" + to + "'");
  }
  return 0;
}

void apply_time_limit() {
  const char* env = std::getenv("DTDP_TIME_LIMIT_MS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long long ms = std::strtoll(env, &end, 10);
  if (*end != '\0' || ms <= 0) {
    throw UsageError("DTDP_TIME_LIMIT_MS must be a positive integer");
  }
  dtdp::set_solver_time_limit(std::chrono::milliseconds(ms));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating and total dominating partitions of multigraphs"};
  app.require_subcommand(1);
  std::string graph_arg, dot, to = "mgf", resume;
  PartitionArgs pa;
  std::size_t limit = 100;
  bool covering = false, exists = false;
  std::optional<int> edge, loop;
  int max_n = 7, jobs = 1;
  std::vector<std::string> tags;

  auto graph_cmd = [&](const std::string& name, const std::string& help,
                       bool with_dot = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_arg, "Graph file (MGF or graph6) or family spec")
        ->required();
    if (with_dot) sub->add_option("--dot", dot, "Write a D/T coloured DOT file");
    return sub;
  };
  CLI::App* check = graph_cmd("check", "Find a DT-pair");
  CLI::App* minimal = graph_cmd("minimal", "Test minimality");
  CLI::App* pairs = graph_cmd("pairs", "List DT-pairs");
  pairs->add_option("--limit", limit, "Maximum number of pairs")->check(CLI::PositiveNumber);
  pairs->add_flag("--covering", covering, "Only pairs with D = V \\ T");
  CLI::App* s2 = graph_cmd("s2", "Build S2(H, P, theta)");
  CLI::App* witness = graph_cmd("witness", "Non-minimality witness for S2(H, P, theta)");
  for (CLI::App* sub : {s2, witness}) {
    sub->add_option("--partition", pa.partition, "P as JSON");
    sub->add_option("--theta", pa.theta, "theta as JSON");
  }
  CLI::App* good = graph_cmd("good", "Good subgraphs of H", false);
  good->add_option("--edge", edge, "Edge id generating Q");
  good->add_option("--loop", loop, "Loop id generating Q");
  good->add_flag("--exists", exists, "Does H have a good subgraph");
  CLI::App* recognize = graph_cmd("recognize", "Classify a loop-free graph");
  CLI::App* domgg = graph_cmd("domgg", "Domatic-type partition number", false);
  CLI::App* convert = graph_cmd("convert", "Convert between formats", false);
  convert->add_option("--to", to, "mgf, graph6 or dot");
  CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--max-n", max_n, "Largest order in graph sweeps")
      ->check(CLI::Range(3, 8));
  verify->add_option("--tags", tags, "Sweeps to run")->delimiter(',');
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--resume", resume, "JSONL file to resume and append to");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_time_limit();
    if (verify->parsed()) return cmd_verify(max_n, tags, jobs, resume);
    const Multigraph g = load_graph(graph_arg);
    if (check->parsed()) return cmd_check(g, dot);
    if (minimal->parsed()) return cmd_minimal(g, dot);
    if (pairs->parsed()) return cmd_pairs(g, limit, covering, dot);
    if (s2->parsed()) return cmd_s2(g, pa, dot);
    if (good->parsed()) return cmd_good(g, edge, loop, exists);
    if (recognize->parsed()) return cmd_recognize(g, dot);
    if (witness->parsed()) return cmd_witness(g, pa, dot);
    if (domgg->parsed()) {
      emit(Json{{"dom_gg_t", dtdp::dom_gg_t(g)}});
      return 0;
    }
    if (convert->parsed()) return cmd_convert(g, to);
  } catch (const dtdp::TimeoutError&) {
    std::cerr << "timeout\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
