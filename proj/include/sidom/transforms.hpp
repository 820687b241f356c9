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

#ifndef SIDOM_TRANSFORMS_HPP_
#define SIDOM_TRANSFORMS_HPP_

#include <compare>
#include <utility>
#include <vector>

#include "sidom/digraph.hpp"
#include "sidom/domination.hpp"

namespace sidom {

// D□H on V(D) x V(H); (x, y) gets id x * |V(H)| + y.
struct ProductDigraph {
  Digraph graph;
  std::vector<std::pair<Vertex, Vertex>> coords;
  int right_order = 0;

  Vertex id(Vertex x, Vertex y) const { return x * right_order + y; }
};

ProductDigraph cartesian_product(const Digraph& d, const Digraph& h);

// D[α]: host vertex v replaced by parts[v]; host arc (v, u) becomes every
// arc from part v to part u.
struct CompositionSpec {
  Digraph host;
  std::vector<Digraph> parts;
};

struct CompositionDigraph {
  Digraph graph;
  // origin[id] = (host vertex, id inside its part).
  std::vector<std::pair<Vertex, Vertex>> origin;
  std::vector<Vertex> part_offset;

  Vertex id(Vertex host, Vertex local) const {
    return part_offset[host] + local;
  }
};

CompositionDigraph composition(const CompositionSpec& spec);

// Vertex i of L(D) is D.arcs()[i]; ((u,v),(w,z)) is an arc iff v == w.
struct LineDigraph {
  Digraph graph;
  std::vector<Arc> arc_of;
};

LineDigraph line_digraph(const Digraph& d);

// Identity of a vertex of S(D), R(D), Q(D) or T(D): an original vertex of D
// or an arc of D.
struct TaggedVertex {
  enum class Kind { kOriginal, kArc };

  Kind kind = Kind::kOriginal;
  Vertex vertex = -1;
  Arc arc{};

  static TaggedVertex original(Vertex v) { return {Kind::kOriginal, v, {}}; }
  static TaggedVertex of_arc(Arc a) { return {Kind::kArc, -1, a}; }
  bool is_arc() const { return kind == Kind::kArc; }

  auto operator<=>(const TaggedVertex&) const = default;
};

// Digraph on V(D) ∪ A(D): original vertex v keeps id v, arc i of D.arcs()
// gets id order + i.
struct MixedDigraph {
  Digraph graph;
  std::vector<TaggedVertex> tags;
  int original_order = 0;

  Vertex arc_vertex(std::size_t arc_index) const {
    return original_order + static_cast<Vertex>(arc_index);
  }
};

MixedDigraph subdivision(const Digraph& d);
MixedDigraph root(const Digraph& d);
MixedDigraph middle(const Digraph& d);
MixedDigraph total(const Digraph& d);

// Vertex-ids of `derived` restricted to its arc-vertices, as a subdigraph.
Subdigraph arc_vertex_subdigraph(const MixedDigraph& derived);

// {S_i x V(H)} on D□H from a strong in-domatic partition {S_i} of D.
VertexPartition lift_product_partition(const VertexPartition& p,
                                       const Digraph& d, const Digraph& h);
// With n the smallest part order: block k < n-1 takes local vertex k of
// every part, the last block takes everything else.
VertexPartition composition_partition(const CompositionSpec& spec);
// From a strong in-domatic partition {S_1..S_k} of L(D): {S_1 ∪ V(D), S_2,
// ..., S_k} on the middle digraph.
VertexPartition lift_middle_partition(const VertexPartition& p,
                                      const Digraph& d);
// {V(D), S_1, ..., S_k} on the total digraph. Requires order >= 3.
VertexPartition lift_total_partition(const VertexPartition& p,
                                     const Digraph& d);

}  // namespace sidom

#endif  // SIDOM_TRANSFORMS_HPP_
