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

#ifndef SIDOM_DIGRAPH_HPP_
#define SIDOM_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sidom {

using Vertex = std::int32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<Vertex>;
using ArcSet = std::vector<Arc>;

// Bit i set <=> vertex i is a member. Only meaningful for order <= 64.
using VertexMask = std::uint64_t;
inline constexpr int kMaskCapacity = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

// A loopless simple digraph on the vertex ids [0, order). Immutable once
// built; the arc list is kept sorted lexicographically.
class Digraph {
 public:
  Digraph() = default;

  // Rejects loops, out-of-range endpoints and repeated arcs.
  static Digraph create(int order, std::span<const Arc> arcs);
  static Digraph create(int order, std::initializer_list<Arc> arcs) {
    return create(order, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return order_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const {
    return static_cast<int>(out_neighbors(v).size());
  }
  int in_degree(Vertex v) const {
    return static_cast<int>(in_neighbors(v).size());
  }

  bool has_arc(Vertex tail, Vertex head) const;
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
  // Position of `a` in arcs(), if present.
  std::optional<std::size_t> arc_index(Arc a) const;
  bool contains(Vertex v) const { return v >= 0 && v < order_; }

  // Bitmask adjacency, available when order() <= kMaskCapacity.
  bool fits_mask() const { return order_ <= kMaskCapacity; }
  VertexMask out_mask(Vertex v) const { return out_masks_[v]; }
  VertexMask in_mask(Vertex v) const { return in_masks_[v]; }
  VertexMask all_mask() const;

  // Display labels are cosmetic: they never take part in equality.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  Digraph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_adj_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_adj_;
  std::vector<VertexMask> out_masks_;
  std::vector<VertexMask> in_masks_;
  std::vector<std::string> labels_;
};

VertexSet out_neighbors(const Digraph& d, Vertex v);
VertexSet in_neighbors(const Digraph& d, Vertex v);

// δ⁺(D) and δ⁻(D). Throw on the empty digraph.
int min_out_degree(const Digraph& d);
int min_in_degree(const Digraph& d);

// An induced or arc-induced subdigraph together with the id mapping back into
// the parent: origin[new_id] == parent_id.
struct Subdigraph {
  Digraph graph;
  std::vector<Vertex> origin;
};

Subdigraph induced_subdigraph(const Digraph& d, const VertexSet& s);
// D[E]: the endpoints of E as vertices, E itself as arcs.
Subdigraph arc_induced_subdigraph(const Digraph& d, const ArcSet& e);

// Strongly connected component index per vertex, numbered in discovery
// order of their roots.
std::vector<int> strong_components(const Digraph& d);
// A single vertex is strong. Throws on the empty digraph.
bool is_strong(const Digraph& d);
// Strongness of D⟨S⟩ with S given as a mask; an empty mask is not strong.
bool induces_strong(const Digraph& d, VertexMask s);

bool is_semicomplete(const Digraph& d);
bool is_complete(const Digraph& d);
bool is_symmetric_arc(const Digraph& d, Arc a);

Digraph converse(const Digraph& d);
// D - a. Throws if `a` is not an arc of D.
Digraph remove_arc(const Digraph& d, Arc a);

// Brute-force permutation search with degree pruning; intended for order <= 8.
bool are_isomorphic(const Digraph& d, const Digraph& h);

VertexSet to_vertex_set(VertexMask mask);
VertexMask to_mask(const VertexSet& s);

}  // namespace sidom

#endif  // SIDOM_DIGRAPH_HPP_
