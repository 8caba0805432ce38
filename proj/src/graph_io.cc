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

// MGF, graph6 and DOT codecs.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dtdp/domination.h"
#include "dtdp/multigraph.h"

namespace dtdp {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Multigraph parse_mgf(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  Multigraph g;
  long long seen = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(line_no, "expected header 'n m'");
      n = to_int(toks[0], line_no);
      m = to_int(toks[1], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
      if (n > 1'000'000 || m > 10'000'000) {
        throw ParseError(line_no, "graph too large");
      }
      g = Multigraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected edge 'u v'");
    long long u = to_int(toks[0], line_no);
    long long v = to_int(toks[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than declared");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (seen != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(seen));
  }
  return g;
}

std::string to_mgf(const Multigraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (EdgeId e : g.edge_ids()) {
    out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) +
           "\n";
  }
  return out;
}

Multigraph from_graph6(const std::string& input) {
  std::string_view code(input);
  while (!code.empty() && (code.back() == '\n' || code.back() == '\r' ||
                           code.back() == ' ')) {
    code.remove_suffix(1);
  }
  constexpr std::string_view kHeader = ">>graph6<<";
  if (code.substr(0, kHeader.size()) == kHeader) code.remove_prefix(kHeader.size());
  for (char c : code) {
    if (c < 63 || c > 126) throw ParseError(1, "character outside graph6 alphabet");
  }
  if (code.empty()) throw ParseError(1, "empty graph6 string");
  size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= code.size()) throw ParseError(1, "truncated size field");
      value = (value << 6) | (code[pos++] - 63);
    }
    return value;
  };
  if (code[0] != 126) {
    n = take(1);
  } else if (code.size() > 1 && code[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 100000) throw ParseError(1, "graph too large");
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(code.size() - pos) != need) {
    throw ParseError(1, "bit vector has wrong length");
  }
  Multigraph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = code[pos + k / 6] - 63;
      if (byte >> (5 - k % 6) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    if ((code[pos + k / 6] - 63) >> (5 - k % 6) & 1) {
      throw ParseError(1, "nonzero padding bits");
    }
  }
  return g;
}

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple()) {
    throw std::invalid_argument("graph6 encodes simple graphs only");
  }
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_dot(const Multigraph& g, const DtPair* pair) {
  std::vector<const char*> color(g.num_vertices(), nullptr);
  if (pair != nullptr) {
    for (VertexId v : pair->D) color.at(v) = "blue";
    for (VertexId v : pair->T) color.at(v) = "red";
  }
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out += "  " + std::to_string(v);
    if (color[v] != nullptr) out += std::string(" [color=") + color[v] + "]";
    out += ";\n";
  }
  for (EdgeId e : g.edge_ids()) {
    out += "  " + std::to_string(g.edge(e).u) + " -- " +
           std::to_string(g.edge(e).v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace dtdp
