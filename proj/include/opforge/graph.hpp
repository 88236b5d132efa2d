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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opforge/errors.hpp"

namespace opforge {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

// Immutable simple undirected graph. Adjacency is stored CSR-style with each
// neighbor list sorted ascending, so iteration order is deterministic and
// membership tests are O(log deg). Safe to share across threads once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Canonicalizes the edge list: duplicates (in either orientation) collapse,
  // self-loops and out-of-range endpoints are rejected.
  static Graph build(Node n, const std::vector<Edge>& edges);

  Node node_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::uint32_t degree(Node v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const Node> neighbors(Node v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(Node u, Node v) const;

  std::uint32_t max_degree() const { return max_degree_; }
  std::uint32_t min_degree() const { return min_degree_; }
  bool is_regular() const { return n_ == 0 || max_degree_ == min_degree_; }

  std::vector<Edge> edges() const;

 private:
  Node n_ = 0;
  std::uint64_t m_ = 0;
  std::uint32_t max_degree_ = 0;
  std::uint32_t min_degree_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Node> adjacency_;
};

struct GraphStats {
  std::uint32_t max_degree = 0;
  std::uint32_t min_degree = 0;
  bool connected = false;
  // Empty when the graph is disconnected (the diameter bound in use presumes
  // connectivity, so we do not report a per-component max).
  std::optional<std::uint32_t> diameter;
};

// BFS layering from a source set S: layers[t] = N_t(S), dist[v] = d(S, v).
// dist is -1 for unreachable nodes. layers[0] equals S (sorted).
struct LayerDecomposition {
  std::vector<std::int32_t> dist;
  std::vector<std::vector<Node>> layers;

  bool reachable(Node v) const { return dist[v] >= 0; }
};

Graph build_graph(Node n, const std::vector<Edge>& edges);

LayerDecomposition layers_from(const Graph& g, const std::vector<Node>& sources);

// Distances only (no layer materialization); used on large graphs.
std::vector<std::int32_t> distances_from(const Graph& g,
                                         const std::vector<Node>& sources);

// Ordered-pair edge count e(S, S2) = |{(v,u) in S x S2 : {v,u} in E}|.
// Overlap is permitted; an edge inside the intersection contributes 2.
std::uint64_t edge_count_between(const Graph& g, const std::vector<Node>& s,
                                 const std::vector<Node>& s2);

// Exact stats; diameter via BFS from every node, so intended for desk-scale
// graphs. Degree extremes and connectivity are cheap at any size.
GraphStats graph_stats(const Graph& g);

// Connected components as sorted node lists, ordered by smallest member.
std::vector<std::vector<Node>> connected_components(const Graph& g);

}  // namespace opforge
