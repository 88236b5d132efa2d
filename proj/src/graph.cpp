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

#include "opforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace opforge {

Graph Graph::build(Node n, const std::vector<Edge>& edges) {
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(u) + " out of range for n=" +
                      std::to_string(n));
    }
    if (v >= n) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(v) + " out of range for n=" +
                      std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at node " + std::to_string(u));
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());

  Graph g;
  g.n_ = n;
  g.m_ = canonical.size();
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : canonical) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (Node v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(2 * g.m_);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : canonical) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (Node v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() +
                  static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  if (n > 0) {
    g.max_degree_ = *std::max_element(deg.begin(), deg.end());
    g.min_degree_ = *std::min_element(deg.begin(), deg.end());
  }
  return g;
}

bool Graph::has_edge(Node u, Node v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Node v = 0; v < n_; ++v) {
    for (Node u : neighbors(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph build_graph(Node n, const std::vector<Edge>& edges) {
  return Graph::build(n, edges);
}

std::vector<std::int32_t> distances_from(const Graph& g,
                                         const std::vector<Node>& sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::EmptySourceSet, "source set is empty");
  }
  std::vector<std::int32_t> dist(g.node_count(), -1);
  std::vector<Node> frontier;
  frontier.reserve(sources.size());
  for (Node s : sources) {
    if (s >= g.node_count()) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "source " + std::to_string(s) + " out of range");
    }
    if (dist[s] < 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::int32_t level = 0;
  std::vector<Node> next;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (Node v : frontier) {
      for (Node u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = level;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

LayerDecomposition layers_from(const Graph& g,
                               const std::vector<Node>& sources) {
  LayerDecomposition out;
  out.dist = distances_from(g, sources);
  std::int32_t max_dist = 0;
  for (std::int32_t d : out.dist) max_dist = std::max(max_dist, d);
  out.layers.assign(static_cast<std::size_t>(max_dist) + 1, {});
  for (Node v = 0; v < g.node_count(); ++v) {
    if (out.dist[v] >= 0) {
      out.layers[static_cast<std::size_t>(out.dist[v])].push_back(v);
    }
  }
  return out;
}

std::uint64_t edge_count_between(const Graph& g, const std::vector<Node>& s,
                                 const std::vector<Node>& s2) {
  std::vector<bool> in_s2(g.node_count(), false);
  for (Node v : s2) {
    if (v >= g.node_count()) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(v) + " out of range");
    }
    in_s2[v] = true;
  }
  std::uint64_t count = 0;
  for (Node v : s) {
    if (v >= g.node_count()) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(v) + " out of range");
    }
    for (Node u : g.neighbors(v)) {
      if (in_s2[u]) ++count;
    }
  }
  return count;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats stats;
  stats.max_degree = g.max_degree();
  stats.min_degree = g.min_degree();
  const Node n = g.node_count();
  if (n == 0) {
    stats.connected = true;
    stats.diameter = 0;
    return stats;
  }
  auto dist0 = distances_from(g, {0});
  stats.connected =
      std::none_of(dist0.begin(), dist0.end(), [](auto d) { return d < 0; });
  if (!stats.connected) return stats;

  std::uint32_t diameter = 0;
  for (Node v = 0; v < n; ++v) {
    auto dist = distances_from(g, {v});
    for (std::int32_t d : dist) {
      diameter = std::max(diameter, static_cast<std::uint32_t>(d));
    }
  }
  stats.diameter = diameter;
  return stats;
}

std::vector<std::vector<Node>> connected_components(const Graph& g) {
  std::vector<std::vector<Node>> components;
  std::vector<bool> seen(g.node_count(), false);
  for (Node start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Node> comp;
    std::queue<Node> bfs;
    bfs.push(start);
    seen[start] = true;
    while (!bfs.empty()) {
      Node v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      for (Node u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          bfs.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace opforge
