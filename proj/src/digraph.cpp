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

#include "sidom/digraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "sidom/error.hpp"

namespace sidom {

Digraph Digraph::create(int order, std::span<const Arc> arcs) {
  if (order < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  Digraph d;
  d.order_ = order;
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : d.arcs_) {
    if (a.tail < 0 || a.tail >= order || a.head < 0 || a.head >= order) {
      Fail(ErrorCode::kInvalidArgument,
           "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
               ") has an endpoint outside [0," + std::to_string(order) + ")");
    }
    if (a.tail == a.head) {
      Fail(ErrorCode::kInvalidArgument,
           "loop at vertex " + std::to_string(a.tail) + " is not allowed");
    }
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  auto dup = std::adjacent_find(d.arcs_.begin(), d.arcs_.end());
  if (dup != d.arcs_.end()) {
    Fail(ErrorCode::kInvalidArgument,
         "duplicate arc (" + std::to_string(dup->tail) + "," +
             std::to_string(dup->head) + ")");
  }

  const auto n = static_cast<std::size_t>(order);
  d.out_offsets_.assign(n + 1, 0);
  d.in_offsets_.assign(n + 1, 0);
  for (const Arc& a : d.arcs_) {
    ++d.out_offsets_[a.tail + 1];
    ++d.in_offsets_[a.head + 1];
  }
  std::partial_sum(d.out_offsets_.begin(), d.out_offsets_.end(),
                   d.out_offsets_.begin());
  std::partial_sum(d.in_offsets_.begin(), d.in_offsets_.end(),
                   d.in_offsets_.begin());
  d.out_adj_.resize(d.arcs_.size());
  d.in_adj_.resize(d.arcs_.size());
  std::vector<std::size_t> out_fill(d.out_offsets_.begin(),
                                    d.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(d.in_offsets_.begin(),
                                   d.in_offsets_.end() - 1);
  // Arcs are sorted by (tail, head), so both lists come out sorted.
  for (const Arc& a : d.arcs_) {
    d.out_adj_[out_fill[a.tail]++] = a.head;
    d.in_adj_[in_fill[a.head]++] = a.tail;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(d.in_adj_.begin() + static_cast<std::ptrdiff_t>(d.in_offsets_[v]),
              d.in_adj_.begin() +
                  static_cast<std::ptrdiff_t>(d.in_offsets_[v + 1]));
  }

  if (d.fits_mask()) {
    d.out_masks_.assign(n, 0);
    d.in_masks_.assign(n, 0);
    for (const Arc& a : d.arcs_) {
      d.out_masks_[a.tail] |= bit(a.head);
      d.in_masks_[a.head] |= bit(a.tail);
    }
  }
  return d;
}

void Digraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    Fail(ErrorCode::kInvalidArgument,
         "vertex " + std::to_string(v) + " is not in [0," +
             std::to_string(order_) + ")");
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return {out_adj_.data() + out_offsets_[v],
          out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return {in_adj_.data() + in_offsets_[v],
          in_offsets_[v + 1] - in_offsets_[v]};
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return false;
  auto out = out_neighbors(tail);
  return std::binary_search(out.begin(), out.end(), head);
}

std::optional<std::size_t> Digraph::arc_index(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

VertexMask Digraph::all_mask() const {
  return order_ >= kMaskCapacity ? ~VertexMask{0}
                                 : (VertexMask{1} << order_) - 1;
}

std::string Digraph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Digraph Digraph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(order_)) {
    Fail(ErrorCode::kInvalidArgument, "label count does not match order");
  }
  Digraph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

VertexSet out_neighbors(const Digraph& d, Vertex v) {
  auto s = d.out_neighbors(v);
  return {s.begin(), s.end()};
}

VertexSet in_neighbors(const Digraph& d, Vertex v) {
  auto s = d.in_neighbors(v);
  return {s.begin(), s.end()};
}

int min_out_degree(const Digraph& d) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  int best = d.out_degree(0);
  for (Vertex v = 1; v < d.order(); ++v) best = std::min(best, d.out_degree(v));
  return best;
}

int min_in_degree(const Digraph& d) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  int best = d.in_degree(0);
  for (Vertex v = 1; v < d.order(); ++v) best = std::min(best, d.in_degree(v));
  return best;
}

Subdigraph induced_subdigraph(const Digraph& d, const VertexSet& s) {
  if (s.empty()) Fail(ErrorCode::kInvalidArgument, "empty vertex set");
  std::vector<Vertex> index(static_cast<std::size_t>(d.order()), -1);
  Subdigraph out;
  for (Vertex v : s) {
    if (!d.contains(v)) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " is not in the digraph");
    }
    if (index[v] != -1) Fail(ErrorCode::kInvalidArgument, "repeated vertex");
    index[v] = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(v);
  }
  ArcSet arcs;
  for (Vertex v : out.origin) {
    for (Vertex w : d.out_neighbors(v)) {
      if (index[w] != -1) arcs.push_back({index[v], index[w]});
    }
  }
  out.graph = Digraph::create(static_cast<int>(out.origin.size()), arcs);
  if (!d.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : out.origin) labels.push_back(d.labels()[v]);
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

Subdigraph arc_induced_subdigraph(const Digraph& d, const ArcSet& e) {
  if (e.empty()) Fail(ErrorCode::kInvalidArgument, "empty arc set");
  VertexSet ends;
  for (const Arc& a : e) {
    if (!d.has_arc(a)) {
      Fail(ErrorCode::kInvalidArgument,
           "(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
               ") is not an arc of the digraph");
    }
    ends.push_back(a.tail);
    ends.push_back(a.head);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Vertex> index(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    index[ends[i]] = static_cast<Vertex>(i);
  }
  ArcSet arcs;
  for (const Arc& a : e) arcs.push_back({index[a.tail], index[a.head]});
  Subdigraph out;
  out.graph = Digraph::create(static_cast<int>(ends.size()), arcs);
  out.origin = std::move(ends);
  return out;
}

namespace {

std::vector<char> reach(const Digraph& d, Vertex from, bool forward) {
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : forward ? d.out_neighbors(v) : d.in_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<int> strong_components(const Digraph& d) {
  // Kosaraju: finish order on D, then sweep the converse.
  const int n = d.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> finish;
  finish.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = d.out_neighbors(v);
      if (next < out.size()) {
        Vertex w = out[next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<Vertex> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : d.in_neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

bool is_strong(const Digraph& d) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  auto all = [](const std::vector<char>& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c != 0; });
  };
  return all(reach(d, 0, true)) && all(reach(d, 0, false));
}

bool induces_strong(const Digraph& d, VertexMask s) {
  if (s == 0) return false;
  const Vertex start = std::countr_zero(s);
  auto closure = [&](bool forward) {
    VertexMask seen = bit(start);
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) {
        const Vertex v = std::countr_zero(f);
        next |= forward ? d.out_mask(v) : d.in_mask(v);
      }
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  };
  return closure(true) == s && closure(false) == s;
}

bool is_semicomplete(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
    }
  }
  return true;
}

bool is_complete(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.order());
  return d.arc_count() == n * (n == 0 ? 0 : n - 1);
}

bool is_symmetric_arc(const Digraph& d, Arc a) {
  return d.has_arc(a) && d.has_arc(a.head, a.tail);
}

Digraph converse(const Digraph& d) {
  ArcSet arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph::create(d.order(), arcs).with_labels(d.labels());
}

Digraph remove_arc(const Digraph& d, Arc a) {
  if (!d.has_arc(a)) {
    Fail(ErrorCode::kInvalidArgument,
         "(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
             ") is not an arc of the digraph");
  }
  ArcSet arcs;
  arcs.reserve(d.arc_count() - 1);
  for (const Arc& b : d.arcs()) {
    if (b != a) arcs.push_back(b);
  }
  return Digraph::create(d.order(), arcs).with_labels(d.labels());
}

bool are_isomorphic(const Digraph& d, const Digraph& h) {
  if (d.order() != h.order() || d.arc_count() != h.arc_count()) return false;
  const int n = d.order();
  auto signature = [](const Digraph& g, Vertex v) {
    return std::pair{g.out_degree(v), g.in_degree(v)};
  };
  std::vector<std::pair<int, int>> ds, hs;
  for (Vertex v = 0; v < n; ++v) {
    ds.push_back(signature(d, v));
    hs.push_back(signature(h, v));
  }
  auto sorted_ds = ds, sorted_hs = hs;
  std::sort(sorted_ds.begin(), sorted_ds.end());
  std::sort(sorted_hs.begin(), sorted_hs.end());
  if (sorted_ds != sorted_hs) return false;

  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || hs[w] != ds[v]) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = d.has_arc(u, v) == h.has_arc(image[u], w) &&
                     d.has_arc(v, u) == h.has_arc(w, image[u]);
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  return extend(0);
}

VertexSet to_vertex_set(VertexMask mask) {
  VertexSet s;
  for (; mask != 0; mask &= mask - 1) s.push_back(std::countr_zero(mask));
  return s;
}

VertexMask to_mask(const VertexSet& s) {
  VertexMask m = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= kMaskCapacity) {
      Fail(ErrorCode::kSizeLimit, "vertex id exceeds mask capacity");
    }
    m |= bit(v);
  }
  return m;
}

}  // namespace sidom
