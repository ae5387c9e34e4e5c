// Copyright 2026 The sketchsdp Authors.
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

#pragma once

#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace sketchsdp {

// Edge list text: a header line `n <num_vertices>`, then one `u v` pair per
// line (0-based). Blank lines and `#` comments are ignored.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& graph);
void save_edge_list(const Graph& graph, const std::string& path);

// Partition text: one `vertex sign` pair per line, sign in {+1, -1, 1}.
Partition read_partition(std::istream& in);
Partition load_partition(const std::string& path);
void write_partition(std::ostream& out, const Partition& partition);
void save_partition(const Partition& partition, const std::string& path);

}  // namespace sketchsdp
