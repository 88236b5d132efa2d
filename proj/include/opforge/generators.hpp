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
#include <string>
#include <vector>

#include "opforge/diffusion.hpp"
#include "opforge/graph.hpp"
#include "opforge/rng.hpp"

namespace opforge {

enum class Family {
  Star,
  CyclePower,
  DaryTree,
  CliqueUnion,
  RandomRegular,
  ErdosRenyi,
};

struct FamilySpec {
  Family family = Family::Star;
  Node n = 0;                        // Star, CyclePower, RandomRegular, ErdosRenyi
  std::uint32_t delta = 0;           // CyclePower: adjacency radius (2*delta-regular)
  std::uint32_t depth = 0;           // DaryTree
  std::uint32_t d = 0;               // DaryTree arity, RandomRegular degree
  std::vector<Node> clique_sizes;    // CliqueUnion
  double p = 0.0;                    // ErdosRenyi
  std::uint32_t retry_cap = 1000;    // RandomRegular pairing restarts
};

Graph generate(const FamilySpec& spec, Rng& rng);

// Direct constructors (deterministic families take no RNG).
Graph star(Node n);
Graph cycle_power(Node n, std::uint32_t delta);
Graph dary_tree(std::uint32_t depth, std::uint32_t d);
Graph dary_tree_of_size(Node size, std::uint32_t d);  // heap-shaped
Graph clique_union(const std::vector<Node>& sizes);
Graph random_regular(Node n, std::uint32_t d, Rng& rng,
                     std::uint32_t retry_cap = 1000);
Graph erdos_renyi(Node n, double p, Rng& rng);

enum class Counterexample {
  RegularNonExpander,  // disjoint regular components; strong attacker wins
  Prop1CycleTrees,     // cycle plus d-ary trees; moderate attacker wins
  CoreDominated,       // small core adjacent to everything; weak attacker wins
  StarForest,          // disjoint stars; weak attacker wins
};

struct CounterexampleSpec {
  Counterexample kind = Counterexample::RegularNonExpander;
  Node n = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double mu = 0.0;          // Prop1CycleTrees
  std::uint32_t t = 0;      // Prop1CycleTrees round horizon
  std::uint32_t d = 0;      // RegularNonExpander component degree
  std::uint32_t s = 0;      // CoreDominated core size / StarForest star count
};

// Generated counterexample plus the attack it is built for: a seed-set hint
// for randomized attackers, or a fully prescribed coloring where the
// construction dictates colors too. Role tags feed the JSON sidecar.
struct CounterexampleArtifact {
  Graph graph;
  std::vector<Node> seed_hint;
  std::optional<SeedColoring> prescribed;
  // Parallel to nodes: short role names such as "cycle", "tree_root:2",
  // "core", "component:0".
  std::vector<std::string> roles;
  // Construction bookkeeping worth echoing to the sidecar (rounded sizes,
  // derived s and d, ...).
  std::vector<std::pair<std::string, double>> derived;
};

CounterexampleArtifact generate_counterexample(const CounterexampleSpec& spec,
                                               Rng& rng);

}  // namespace opforge
