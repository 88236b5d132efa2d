// Copyright 2026 The opinion-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opforge/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace opforge {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw Error(ErrorCode::GraphLoadError, "missing header line");
  }
  std::istringstream header(line);
  std::uint64_t n = 0, m = 0;
  if (!(header >> n >> m)) {
    throw Error(ErrorCode::GraphLoadError, "malformed header, expected 'n m'");
  }
  if (n > 0xFFFFFFFFULL) {
    throw Error(ErrorCode::GraphLoadError, "node count too large");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) {
      throw Error(ErrorCode::GraphLoadError,
                  "expected " + std::to_string(m) + " edges, got " +
                      std::to_string(i));
    }
    std::istringstream row(line);
    std::uint64_t u = 0, v = 0;
    if (!(row >> u >> v)) {
      throw Error(ErrorCode::GraphLoadError,
                  "malformed edge line: '" + line + "'");
    }
    if (u >= n || v >= n) {
      throw Error(ErrorCode::GraphLoadError,
                  "edge endpoint out of range in line: '" + line + "'");
    }
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  try {
    return Graph::build(static_cast<Node>(n), edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::GraphLoadError, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::GraphLoadError, "cannot open '" + path + "'");
  }
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out,
                     const std::string& header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines(header_comment);
    std::string line;
    while (std::getline(lines, line)) {
      out << "# " << line << '\n';
    }
  }
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_edge_list_file(const Graph& g, const std::string& path,
                          const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::GraphLoadError, "cannot write '" + path + "'");
  }
  write_edge_list(g, out, header_comment);
}

SeedColoring read_seed_coloring(std::istream& in, Node n) {
  std::vector<Node> nodes;
  std::vector<Color> colors;
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    std::uint64_t v = 0;
    std::string color_token;
    if (!(row >> v >> color_token)) {
      throw Error(ErrorCode::GraphLoadError,
                  "malformed seed line: '" + line + "'");
    }
    Color c;
    if (color_token == "B" || color_token == "b") {
      c = Color::Black;
    } else if (color_token == "W" || color_token == "w") {
      c = Color::White;
    } else {
      throw Error(ErrorCode::GraphLoadError,
                  "seed color must be B or W, got '" + color_token + "'");
    }
    nodes.push_back(static_cast<Node>(v));
    colors.push_back(c);
  }
  return SeedColoring::make(std::move(nodes), std::move(colors), n);
}

SeedColoring read_seed_coloring_file(const std::string& path, Node n) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::GraphLoadError, "cannot open '" + path + "'");
  }
  return read_seed_coloring(in, n);
}

void write_seed_coloring(const SeedColoring& seed, std::ostream& out) {
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    out << seed.nodes[i] << ' '
        << (seed.colors[i] == Color::Black ? 'B' : 'W') << '\n';
  }
}

}  // namespace opforge
