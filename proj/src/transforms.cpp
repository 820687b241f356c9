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

#include "sidom/transforms.hpp"

#include <algorithm>
#include <string>

#include "sidom/error.hpp"

namespace sidom {

namespace {

std::string arc_label(const Digraph& d, Arc a) {
  return "(" + d.label(a.tail) + "," + d.label(a.head) + ")";
}

void require_arcs(const Digraph& d, const char* what) {
  if (d.arc_count() == 0) {
    Fail(ErrorCode::kNotApplicable,
         std::string(what) + " needs a digraph with at least one arc");
  }
}

enum class MixedKind { kSubdivision, kRoot, kMiddle, kTotal };

MixedDigraph build_mixed(const Digraph& d, MixedKind kind, const char* name) {
  require_arcs(d, name);
  const int n = d.order();
  MixedDigraph out;
  out.original_order = n;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    out.tags.push_back(TaggedVertex::original(v));
    labels.push_back(d.label(v));
  }
  for (const Arc& a : d.arcs()) {
    out.tags.push_back(TaggedVertex::of_arc(a));
    labels.push_back(arc_label(d, a));
  }
  const bool original_links = kind == MixedKind::kRoot || kind == MixedKind::kTotal;
  const bool arc_links = kind == MixedKind::kMiddle || kind == MixedKind::kTotal;
  ArcSet arcs;
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    const Arc& a = d.arcs()[i];
    const Vertex av = out.arc_vertex(i);
    arcs.push_back({a.tail, av});  // x -> (x, v)
    arcs.push_back({av, a.head});  // (u, v) -> v
  }
  if (original_links) {
    for (const Arc& a : d.arcs()) arcs.push_back(a);  // x -> N⁺_D(x)
  }
  if (arc_links) {
    // (u, v) -> (v, y): exactly the arcs of L(D).
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
      for (std::size_t j = 0; j < d.arc_count(); ++j) {
        if (d.arcs()[i].head == d.arcs()[j].tail) {
          arcs.push_back({out.arc_vertex(i), out.arc_vertex(j)});
        }
      }
    }
  }
  out.graph = Digraph::create(n + static_cast<int>(d.arc_count()), arcs)
                  .with_labels(std::move(labels));
  return out;
}

void require_valid_partition(const Digraph& d, const VertexPartition& p,
                             const char* what) {
  if (p.order() != d.order()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": partition order does not match digraph");
  }
  auto diag = check_strong_in_domatic_partition(d, p);
  if (!diag.valid) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": not a strong in-domatic partition (" +
             diag.message() + ")");
  }
}

}  // namespace

ProductDigraph cartesian_product(const Digraph& d, const Digraph& h) {
  if (d.order() == 0 || h.order() == 0) {
    Fail(ErrorCode::kInvalidArgument, "cartesian product of an empty factor");
  }
  ProductDigraph out;
  out.right_order = h.order();
  std::vector<std::string> labels;
  for (Vertex x = 0; x < d.order(); ++x) {
    for (Vertex y = 0; y < h.order(); ++y) {
      out.coords.emplace_back(x, y);
      labels.push_back("(" + d.label(x) + "," + h.label(y) + ")");
    }
  }
  ArcSet arcs;
  for (Vertex x = 0; x < d.order(); ++x) {
    for (const Arc& b : h.arcs()) arcs.push_back({out.id(x, b.tail), out.id(x, b.head)});
  }
  for (const Arc& a : d.arcs()) {
    for (Vertex y = 0; y < h.order(); ++y) {
      arcs.push_back({out.id(a.tail, y), out.id(a.head, y)});
    }
  }
  out.graph = Digraph::create(d.order() * h.order(), arcs)
                  .with_labels(std::move(labels));
  return out;
}

CompositionDigraph composition(const CompositionSpec& spec) {
  const Digraph& host = spec.host;
  if (host.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty host");
  if (spec.parts.size() != static_cast<std::size_t>(host.order())) {
    Fail(ErrorCode::kInvalidArgument,
         "composition needs one part per host vertex (" +
             std::to_string(host.order()) + "), got " +
             std::to_string(spec.parts.size()));
  }
  CompositionDigraph out;
  std::vector<std::string> labels;
  Vertex next = 0;
  for (Vertex v = 0; v < host.order(); ++v) {
    const Digraph& part = spec.parts[v];
    if (part.order() == 0) {
      Fail(ErrorCode::kInvalidArgument,
           "part of host vertex " + std::to_string(v) + " is empty");
    }
    out.part_offset.push_back(next);
    for (Vertex x = 0; x < part.order(); ++x) {
      out.origin.emplace_back(v, x);
      labels.push_back(host.label(v) + ":" + part.label(x));
    }
    next += part.order();
  }
  ArcSet arcs;
  for (Vertex v = 0; v < host.order(); ++v) {
    for (const Arc& a : spec.parts[v].arcs()) {
      arcs.push_back({out.id(v, a.tail), out.id(v, a.head)});
    }
  }
  for (const Arc& a : host.arcs()) {
    for (Vertex x = 0; x < spec.parts[a.tail].order(); ++x) {
      for (Vertex y = 0; y < spec.parts[a.head].order(); ++y) {
        arcs.push_back({out.id(a.tail, x), out.id(a.head, y)});
      }
    }
  }
  out.graph = Digraph::create(next, arcs).with_labels(std::move(labels));
  return out;
}

LineDigraph line_digraph(const Digraph& d) {
  require_arcs(d, "line digraph");
  LineDigraph out;
  out.arc_of = d.arcs();
  std::vector<std::string> labels;
  for (const Arc& a : d.arcs()) labels.push_back(arc_label(d, a));
  ArcSet arcs;
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    const Vertex v = d.arcs()[i].head;
    for (Vertex z : d.out_neighbors(v)) {
      arcs.push_back({static_cast<Vertex>(i),
                      static_cast<Vertex>(*d.arc_index({v, z}))});
    }
  }
  out.graph = Digraph::create(static_cast<int>(d.arc_count()), arcs)
                  .with_labels(std::move(labels));
  return out;
}

MixedDigraph subdivision(const Digraph& d) {
  return build_mixed(d, MixedKind::kSubdivision, "subdivision digraph");
}

MixedDigraph root(const Digraph& d) {
  return build_mixed(d, MixedKind::kRoot, "root digraph");
}

MixedDigraph middle(const Digraph& d) {
  return build_mixed(d, MixedKind::kMiddle, "middle digraph");
}

MixedDigraph total(const Digraph& d) {
  return build_mixed(d, MixedKind::kTotal, "total digraph");
}

Subdigraph arc_vertex_subdigraph(const MixedDigraph& derived) {
  VertexSet arc_vertices;
  for (Vertex v = derived.original_order; v < derived.graph.order(); ++v) {
    arc_vertices.push_back(v);
  }
  return induced_subdigraph(derived.graph, arc_vertices);
}

VertexPartition lift_product_partition(const VertexPartition& p,
                                       const Digraph& d, const Digraph& h) {
  if (d.order() == 0 || h.order() == 0 || !is_strong(d) || !is_strong(h)) {
    Fail(ErrorCode::kNotStrong, "product lift needs two strong factors");
  }
  require_valid_partition(d, p, "product lift");
  std::vector<int> block_of;
  block_of.reserve(static_cast<std::size_t>(d.order() * h.order()));
  for (Vertex x = 0; x < d.order(); ++x) {
    for (Vertex y = 0; y < h.order(); ++y) block_of.push_back(p.block_of(x));
  }
  return VertexPartition::from_assignment(std::move(block_of)).canonical();
}

VertexPartition composition_partition(const CompositionSpec& spec) {
  if (spec.host.order() < 2) {
    Fail(ErrorCode::kNotApplicable, "composition partition needs a nontrivial host");
  }
  if (!is_strong(spec.host)) {
    Fail(ErrorCode::kNotStrong, "composition partition needs a strong host");
  }
  CompositionDigraph c = composition(spec);
  int smallest = c.graph.order();
  for (const Digraph& part : spec.parts) smallest = std::min(smallest, part.order());
  std::vector<int> block_of;
  block_of.reserve(c.origin.size());
  for (const auto& [host_vertex, local] : c.origin) {
    block_of.push_back(std::min(local, smallest - 1));
  }
  return VertexPartition::from_assignment(std::move(block_of)).canonical();
}

VertexPartition lift_middle_partition(const VertexPartition& p,
                                      const Digraph& d) {
  if (d.order() < 2 || !is_strong(d)) {
    Fail(ErrorCode::kNotStrong, "middle lift needs a nontrivial strong digraph");
  }
  LineDigraph line = line_digraph(d);
  require_valid_partition(line.graph, p, "middle lift");
  std::vector<int> block_of(static_cast<std::size_t>(d.order()), 0);
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    block_of.push_back(p.block_of(static_cast<Vertex>(i)));
  }
  return VertexPartition::from_assignment(std::move(block_of)).canonical();
}

VertexPartition lift_total_partition(const VertexPartition& p,
                                     const Digraph& d) {
  if (d.order() < 3) {
    Fail(ErrorCode::kNotApplicable, "total lift needs order >= 3");
  }
  if (!is_strong(d)) Fail(ErrorCode::kNotStrong, "total lift needs a strong digraph");
  LineDigraph line = line_digraph(d);
  require_valid_partition(line.graph, p, "total lift");
  std::vector<int> block_of(static_cast<std::size_t>(d.order()), 0);
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    block_of.push_back(p.block_of(static_cast<Vertex>(i)) + 1);
  }
  return VertexPartition::from_assignment(std::move(block_of)).canonical();
}

}  // namespace sidom
