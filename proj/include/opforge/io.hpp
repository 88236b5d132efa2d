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

#include <iosfwd>
#include <string>

#include "opforge/diffusion.hpp"
#include "opforge/graph.hpp"

namespace opforge {

// Edge-list format: first line "n m", then m lines "u v" (0-indexed,
// whitespace-separated). Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
// header_comment, if nonempty, is written as leading '#' lines (one per
// newline-separated chunk); readers skip them.
void write_edge_list(const Graph& g, std::ostream& out,
                     const std::string& header_comment = "");
void write_edge_list_file(const Graph& g, const std::string& path,
                          const std::string& header_comment = "");

// Seeds file: one "node B|W" per line, '#' comments ignored.
SeedColoring read_seed_coloring(std::istream& in, Node n);
SeedColoring read_seed_coloring_file(const std::string& path, Node n);
void write_seed_coloring(const SeedColoring& seed, std::ostream& out);

}  // namespace opforge
