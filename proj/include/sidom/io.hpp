// Copyright 2026 The sidom Authors.
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

#ifndef SIDOM_IO_HPP_
#define SIDOM_IO_HPP_

#include <string>
#include <string_view>

#include "sidom/digraph.hpp"
#include "sidom/domination.hpp"

namespace sidom {

// Digraph text format:
//   # comment
//   n 4
//   0 1
//   1 0
// Parse errors raise kParse with the 1-based line number.
Digraph parse_digraph(std::string_view text);

// Canonical form: header line, arcs in lexicographic order, no comments,
// newline-terminated.
std::string format_digraph(const Digraph& d);

// One block per line, vertex ids separated by spaces. The blocks must
// partition [0, order).
VertexPartition parse_partition(std::string_view text, int order);
std::string format_partition(const VertexPartition& p);

// One block per line as "u,v" tokens.
std::string format_arc_partition(const Digraph& d, const ArcPartition& q);

// Graphviz export; vertices carry their labels.
std::string to_dot(const Digraph& d, std::string_view name = "D");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace sidom

#endif  // SIDOM_IO_HPP_
