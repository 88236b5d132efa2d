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
#include <string>
#include <vector>

#include "opforge/diffusion.hpp"
#include "opforge/graph.hpp"

namespace opforge {

// Minimum Influence instance: place b black and w white seeds to minimize the
// expected number of white nodes after t rounds.
struct MIInstance {
  Graph graph;
  std::uint32_t b = 0;
  std::uint32_t w = 0;
  std::uint32_t t = 0;
};

enum class NodeRoleKind : std::uint8_t {
  VOriginal,  // copy of an original node v_i
  VGadget,    // member of the clique attached to v_i
  UEdge,      // the node u_j splitting original edge j
  UGadget,    // member of the clique attached to u_j
  QLeaf,      // the leaf q_j hanging off u_j
};

struct NodeRole {
  NodeRoleKind kind = NodeRoleKind::VOriginal;
  std::uint32_t index = 0;  // original node i or original edge j
};

std::string role_to_string(const NodeRole& role);

// Gadget graph built from a clique instance (G', k): each original edge is
// split by a node u_j, every v_i and u_j gets an s-clique attached, and every
// u_j gets a pendant leaf q_j. Size is n'(s+1) + m'(s+2); budgets are b = k,
// w = C(k,2), t = 2.
struct ReductionArtifacts {
  MIInstance instance;
  Graph source;                    // the original G'
  std::uint32_t n_prime = 0;
  std::uint32_t m_prime = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  std::vector<Edge> source_edges;  // edge j of G' in sorted order
  std::vector<NodeRole> roles;     // one per gadget-graph node
  std::vector<Node> original_ids;  // gadget id of v_i
  std::vector<Node> edge_ids;      // gadget id of u_j
  std::vector<Node> leaf_ids;      // gadget id of q_j
};

ReductionArtifacts build_mi_instance(const Graph& g_prime, std::uint32_t k,
                                     std::uint32_t s);

// Black on the k clique nodes, white on the C(k,2) leaves of the clique's
// edge gadgets. Throws NotAClique if the given nodes do not induce a k-clique
// in G'.
SeedColoring clique_witness_coloring(const ReductionArtifacts& art,
                                     const std::vector<Node>& clique);

enum class MIMethod : std::uint8_t { ExactExpectation, MonteCarlo };

struct MIOptions {
  MIMethod method = MIMethod::MonteCarlo;
  std::uint64_t mc_trials = 1000;  // per sampled placement
  std::uint64_t seed = 0;
  std::uint32_t jobs = 1;
  // Exact tie-branch enumeration gives up past this many outcome paths.
  std::uint64_t branch_budget = 1ULL << 22;
  // MonteCarlo mode still expands placements exactly when the tie tree is
  // this small; sampling kicks in only beyond (cheaper and noise-free).
  std::uint64_t mc_exact_path_cap = 4096;
};

struct MIResult {
  double optimum = 0.0;
  SeedColoring placement;
  std::uint64_t placements_total = 0;
  std::uint64_t placements_pruned = 0;   // dismissed by the tie-rule sandwich
  std::uint64_t placements_sampled = 0;  // needed MC / exact tie expansion
};

// Exhaustive search over all C(n,b)*C(n-b,w) placements (lexicographic by
// black list then white list; value ties keep the lexicographically smallest
// placement). Placements are sandwiched by two deterministic runs -- ties
// resolved all-black lower-bounds the expectation, all-white upper-bounds it
// -- and only placements whose bounds straddle the incumbent are expanded
// exactly (ExactExpectation) or sampled (MonteCarlo). ExactExpectation
// requires n <= 20 and t <= 3.
MIResult mi_bruteforce(const MIInstance& inst, const MIOptions& opts);

// Expected w-hat_t for one placement via full tie-coin path enumeration.
double placement_expectation_exact(const Graph& g, const SeedColoring& seed,
                                   std::uint32_t t, std::uint64_t branch_budget);

// Monte Carlo estimate with a deterministic content-derived stream.
double placement_expectation_mc(const Graph& g, const SeedColoring& seed,
                                std::uint32_t t, std::uint64_t trials,
                                std::uint64_t seed_base);

// Deterministic run with all ties forced to one color; Black gives a lower
// bound on the expectation, White an upper bound.
std::uint64_t placement_whites_forced(const Graph& g, const SeedColoring& seed,
                                      std::uint32_t t, TieRule rule);

// True iff every node of g is within distance t of S; by the reduction this
// matches "the diffusion seeded at S stabilizes within t rounds".
bool thop_domset_check(const Graph& g, const std::vector<Node>& s,
                       std::uint32_t t);

}  // namespace opforge
