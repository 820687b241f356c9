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

#ifndef SIDOM_UGRAPH_HPP_
#define SIDOM_UGRAPH_HPP_

#include <optional>
#include <span>
#include <vector>

#include "sidom/digraph.hpp"

namespace sidom {

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on [0, order). Carries the auxiliary invariants
// (connectivity, connected domatic number, clique domination, planarity).
class UGraph {
 public:
  UGraph() = default;

  // Endpoints may come in either orientation; loops and repeats are errors.
  static UGraph create(int order, std::span<const Edge> edges);
  static UGraph create(int order, std::initializer_list<Edge> edges) {
    return create(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  // Requires order() <= kMaskCapacity.
  VertexMask neighbor_mask(Vertex v) const { return masks_.at(v); }

  friend bool operator==(const UGraph& a, const UGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<VertexMask> masks_;
};

// UG(D): uv is an edge iff (u,v) or (v,u) is an arc.
UGraph underlying_graph(const Digraph& d);

bool is_connected(const UGraph& g);
// Every vertex outside S has a neighbor in S.
bool is_dominating_set(const UGraph& g, const VertexSet& s);
bool is_clique(const UGraph& g, const VertexSet& s);
// G⟨S⟩ is connected (S nonempty).
bool is_connected_subset(const UGraph& g, const VertexSet& s);

// κ(G) by Menger's theorem (unit-capacity vertex-split flows). G must be
// connected of order >= 2; a complete graph reports order - 1.
int vertex_connectivity(const UGraph& g);
// Same quantity by trying every vertex subset in increasing size. Small
// graphs only; used to cross-check the flow-based computation.
int vertex_connectivity_exhaustive(const UGraph& g);

struct ConnectedDomaticPartition {
  int value = 0;
  std::vector<VertexSet> blocks;
};

// d_c(G) with a witness partition into connected dominating sets.
ConnectedDomaticPartition connected_domatic_number(const UGraph& g);

// Smallest dominating clique, or nullopt when G has none.
std::optional<VertexSet> minimum_dominating_clique(const UGraph& g);
// γ_cl(G); nullopt is the "no dominating clique" outcome.
std::optional<int> clique_domination_number(const UGraph& g);

bool is_planar(const UGraph& g);

}  // namespace sidom

#endif  // SIDOM_UGRAPH_HPP_
