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

// Runs the dtdp binary and checks its exit codes and JSON output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct CliRun {
  int code = -1;
  std::string out;
};

// `env` is prepended to the command line; stderr is folded into `out`.
CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " DTDP_CLI_PATH " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json parse(const CliRun& r) { return Json::parse(r.out); }

TEST(CliTest, Check) {
  const CliRun yes = run("check path:4");
  EXPECT_EQ(yes.code, 0);
  const Json j = parse(yes);
  EXPECT_TRUE(j["dtdp"].get<bool>());
  EXPECT_EQ(j["pair"]["D"], Json::parse("[0,3]"));
  EXPECT_EQ(j["pair"]["T"], Json::parse("[1,2]"));
  const CliRun no = run("check cycle:5");
  EXPECT_EQ(no.code, 1);
  EXPECT_FALSE(parse(no)["dtdp"].get<bool>());
}

TEST(CliTest, Minimal) {
  const CliRun c12 = run("minimal cycle:12");
  EXPECT_EQ(c12.code, 1);
  const Json j = parse(c12);
  EXPECT_FALSE(j["minimal"].get<bool>());
  EXPECT_TRUE(j.contains("witness_edge"));
  EXPECT_EQ(run("minimal path:10").code, 0);
}

TEST(CliTest, Recognize) {
  const CliRun c9 = run("recognize cycle:9");
  EXPECT_EQ(c9.code, 0);
  EXPECT_EQ(parse(c9)["verdict"], "cycle369");
  EXPECT_TRUE(parse(c9)["H"].is_null());
  const Json p10 = parse(run("recognize path:10"));
  EXPECT_EQ(p10["verdict"], "subdivision");
  EXPECT_EQ(p10["H"], "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_TRUE(p10["reason"].is_null());
  const Json c12 = parse(run("recognize cycle:12"));
  EXPECT_EQ(c12["verdict"], "not_minimal");
  EXPECT_TRUE(c12["reason"].is_string());
}

TEST(CliTest, GoodAndDomgg) {
  const CliRun c4 = run("good cycle:4 --edge 0");
  EXPECT_EQ(c4.code, 0);
  EXPECT_TRUE(parse(c4)["good"].get<bool>());
  EXPECT_EQ(run("good cycle:3 --edge 0").code, 1);
  EXPECT_EQ(parse(run("domgg complete:9"))["dom_gg_t"], 3);
}

TEST(CliTest, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "dtdp_cli_p3.mgf";
  {
    std::ofstream f(path);
    f << "# P3\n3 2\n0 1\n1 2\n";
  }
  const CliRun r = run("convert " + path.string() + " --to graph6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Bg\n");
  std::filesystem::remove(path);
}

TEST(CliTest, Witness) {
  const CliRun r = run("witness cycle:4");
  EXPECT_EQ(r.code, 0);
  const Json j = parse(r);
  EXPECT_FALSE(j["removed_edges"].empty());
}

TEST(CliTest, ErrorsExitTwo) {
  EXPECT_EQ(run("check nonsense:3").code, 2);
  EXPECT_EQ(run("check /no/such/file").code, 2);
  EXPECT_EQ(run("frobnicate path:3").code, 2);
  EXPECT_EQ(run("verify --tags no-such-tag").code, 2);
}

TEST(CliTest, TimeoutExitsTwo) {
  const CliRun r = run("pairs complete:20 --limit 10000000", "DTDP_TIME_LIMIT_MS=1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("timeout"), std::string::npos);
}

TEST(CliTest, VerifyWritesReports) {
  const CliRun r = run("verify --tags paths,cycles");
  EXPECT_EQ(r.code, 0);
  int lines = 0;
  std::size_t start = 0;
  while (start < r.out.size()) {
    const std::size_t end = r.out.find('\n', start);
    const Json j = Json::parse(r.out.substr(start, end - start));
    EXPECT_TRUE(j["pass"].get<bool>());
    ++lines;
    start = end == std::string::npos ? r.out.size() : end + 1;
  }
  EXPECT_EQ(lines, 2);
}

}  // namespace
