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

#include "sidom/ugraph.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <queue>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sidom/error.hpp"

namespace sidom {

UGraph UGraph::create(int order, std::span<const Edge> edges) {
  if (order < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  UGraph g;
  g.order_ = order;
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      Fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) Fail(ErrorCode::kInvalidArgument, "self-edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    Fail(ErrorCode::kInvalidArgument, "duplicate edge");
  }
  g.adj_.assign(static_cast<std::size_t>(order), {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  if (order <= kMaskCapacity) {
    g.masks_.assign(static_cast<std::size_t>(order), 0);
    for (const Edge& e : g.edges_) {
      g.masks_[e.u] |= bit(e.v);
      g.masks_[e.v] |= bit(e.u);
    }
  }
  return g;
}

bool UGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

UGraph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (const Arc& a : d.arcs()) {
    // Antiparallel arcs collapse into one edge; keep the (u<v) copy.
    if (a.tail < a.head || !d.has_arc(a.head, a.tail)) {
      edges.push_back({a.tail, a.head});
    }
  }
  return UGraph::create(d.order(), edges);
}

namespace {

void check_subset(const UGraph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
}

// Connected-component sweep restricted to `alive`.
bool connected_within(const UGraph& g, const std::vector<char>& alive) {
  Vertex start = -1;
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (alive[v]) {
      ++total;
      if (start == -1) start = v;
    }
  }
  if (total == 0) return false;
  std::vector<char> seen(alive.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == total;
}

void require_connected(const UGraph& g, int min_order, const char* what) {
  if (g.order() < min_order) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " needs a graph of order >= " +
             std::to_string(min_order));
  }
  if (!is_connected(g)) {
    Fail(ErrorCode::kNotApplicable,
         std::string(what) + " is only defined for connected graphs");
  }
}

bool is_complete_graph(const UGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

// Maximum number of internally disjoint s-t paths, s and t non-adjacent.
int local_connectivity(const UGraph& g, Vertex s, Vertex t) {
  // Vertex v splits into 2v (in) and 2v+1 (out).
  const int n = g.order();
  const int nodes = 2 * n;
  const int big = n + 1;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                    std::vector<int>(nodes, 0));
  for (Vertex v = 0; v < n; ++v) {
    cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
  }
  for (const Edge& e : g.edges()) {
    cap[2 * e.u + 1][2 * e.v] = big;
    cap[2 * e.v + 1][2 * e.u] = big;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[sink] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y) {
        if (parent[y] == -1 && cap[x][y] > 0) {
          parent[y] = x;
          q.push(y);
        }
      }
    }
    if (parent[sink] == -1) break;
    for (int y = sink; y != source; y = parent[y]) {
      --cap[parent[y]][y];
      ++cap[y][parent[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_connected(const UGraph& g) {
  if (g.order() == 0) return false;
  return connected_within(g, std::vector<char>(g.order(), 1));
}

bool is_dominating_set(const UGraph& g, const VertexSet& s) {
  check_subset(g, s);
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    const auto& nbrs = g.neighbors(x);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex w) { return in[w] != 0; })) {
      return false;
    }
  }
  return true;
}

bool is_clique(const UGraph& g, const VertexSet& s) {
  check_subset(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_connected_subset(const UGraph& g, const VertexSet& s) {
  check_subset(g, s);
  if (s.empty()) return false;
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) alive[v] = 1;
  return connected_within(g, alive);
}

int vertex_connectivity(const UGraph& g) {
  require_connected(g, 2, "vertex connectivity");
  if (is_complete_graph(g)) return g.order() - 1;
  int best = g.order() - 1;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex t = s + 1; t < g.order(); ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

int vertex_connectivity_exhaustive(const UGraph& g) {
  require_connected(g, 2, "vertex connectivity");
  const int n = g.order();
  if (n > 24) Fail(ErrorCode::kSizeLimit, "exhaustive cut search caps at 24");
  for (int size = 0; size <= n - 2; ++size) {
    // Every subset of `size` vertices, via a sorted index combination.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<char> alive(static_cast<std::size_t>(n), 1);
      for (int v : pick) alive[v] = 0;
      if (!connected_within(g, alive)) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;
}

namespace {

class ConnectedDomaticSearch {
 public:
  ConnectedDomaticSearch(const UGraph& g, int k) : g_(g), k_(k) {
    block_.assign(static_cast<std::size_t>(k), 0);
    nbr_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) nbr_[v] = g.neighbor_mask(v);
    unassigned_ = g.order() >= kMaskCapacity ? ~VertexMask{0}
                                             : (VertexMask{1} << g.order()) - 1;
    owner_.assign(static_cast<std::size_t>(g.order()), -1);
  }

  bool run() { return assign(0, 0); }

  std::vector<VertexSet> blocks() const {
    std::vector<VertexSet> out;
    for (VertexMask m : block_) out.push_back(to_vertex_set(m));
    return out;
  }

 private:
  bool feasible() const {
    for (Vertex x = 0; x < g_.order(); ++x) {
      int missing = 0;
      for (int j = 0; j < k_; ++j) {
        if (owner_[x] == j) continue;
        if ((nbr_[x] & (block_[j] | unassigned_)) == 0) ++missing;
      }
      if (owner_[x] >= 0 ? missing > 0 : missing > 1) return false;
    }
    return true;
  }

  bool assign(Vertex v, int open) {
    if (v == g_.order()) {
      if (open < k_) return false;
      for (VertexMask m : block_) {
        if (!is_connected_subset(g_, to_vertex_set(m))) return false;
      }
      return true;
    }
    if (open + (g_.order() - v) < k_) return false;
    const int limit = std::min(open + 1, k_);
    for (int j = 0; j < limit; ++j) {
      block_[j] |= bit(v);
      unassigned_ &= ~bit(v);
      owner_[v] = j;
      if (feasible() && assign(v + 1, std::max(open, j + 1))) return true;
      block_[j] &= ~bit(v);
      unassigned_ |= bit(v);
      owner_[v] = -1;
    }
    return false;
  }

  const UGraph& g_;
  int k_;
  std::vector<VertexMask> block_;
  std::vector<VertexMask> nbr_;
  VertexMask unassigned_ = 0;
  std::vector<int> owner_;
};

}  // namespace

ConnectedDomaticPartition connected_domatic_number(const UGraph& g) {
  require_connected(g, 1, "connected domatic number");
  if (g.order() > kMaskCapacity) {
    Fail(ErrorCode::kSizeLimit, "connected domatic search caps at order 64");
  }
  ConnectedDomaticPartition best{1, {VertexSet{}}};
  for (Vertex v = 0; v < g.order(); ++v) best.blocks[0].push_back(v);
  // Merging two blocks of a connected domatic partition yields another one,
  // so feasible block counts form a prefix and an ascending scan is exact.
  for (int k = 2; k <= g.order(); ++k) {
    ConnectedDomaticSearch search(g, k);
    if (!search.run()) break;
    best = {k, search.blocks()};
  }
  return best;
}

std::optional<VertexSet> minimum_dominating_clique(const UGraph& g) {
  if (g.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty graph");
  std::optional<VertexSet> best;
  VertexSet current;
  std::function<void(Vertex)> grow = [&](Vertex from) {
    if (!current.empty() && (!best || current.size() < best->size()) &&
        is_dominating_set(g, current)) {
      best = current;
    }
    if (best && current.size() + 1 >= best->size()) return;
    for (Vertex v = from; v < g.order(); ++v) {
      bool joins = std::all_of(current.begin(), current.end(),
                               [&](Vertex u) { return g.adjacent(u, v); });
      if (!joins) continue;
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  return best;
}

std::optional<int> clique_domination_number(const UGraph& g) {
  auto clique = minimum_dominating_clique(g);
  if (!clique) return std::nullopt;
  return static_cast<int>(clique->size());
}

bool is_planar(const UGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS,
                                      boost::undirectedS>;
  Graph bg(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace sidom
