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

#include "sidom/families.hpp"

#include <string>

#include "sidom/error.hpp"
#include "sidom/transforms.hpp"

namespace sidom {

Digraph complete_digraph(int n) {
  if (n < 1) Fail(ErrorCode::kNotApplicable, "complete digraph needs n >= 1");
  ArcSet arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::create(n, arcs);
}

Digraph directed_cycle(int n) {
  if (n < 2) Fail(ErrorCode::kNotApplicable, "directed cycle needs n >= 2");
  ArcSet arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  // For n == 2 this yields both (0,1) and (1,0).
  return Digraph::create(n, arcs);
}

Digraph empty_digraph(int n) {
  if (n < 1) Fail(ErrorCode::kNotApplicable, "empty digraph needs n >= 1");
  return Digraph::create(n, {});
}

FamilyInstance pair_critical_family(int n) {
  if (n < 3) {
    Fail(ErrorCode::kNotApplicable,
         "pair-critical family requires n >= 3, got n = " + std::to_string(n));
  }
  auto u = [](int i) { return static_cast<Vertex>(i - 1); };
  auto v = [n](int i) { return static_cast<Vertex>(n + i - 1); };
  ArcSet arcs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < j) {
        arcs.push_back({u(i), u(j)});
        arcs.push_back({v(i), v(j)});
      }
      if (i >= j) {
        arcs.push_back({v(i), u(j)});
        arcs.push_back({u(i), v(j)});
      }
    }
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<VertexSet> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({u(i), v(i)});

  FamilyInstance out;
  out.family = "pair-critical";
  out.digraph = Digraph::create(2 * n, arcs).with_labels(std::move(labels));
  out.canonical_partition = VertexPartition::from_blocks(2 * n, blocks);
  out.claimed_value = n;
  out.claimed_critical = true;
  return out;
}

namespace {

CompositionSpec blown_up_cycle(int cycle_order, int part_order,
                               int last_part_order) {
  CompositionSpec spec;
  spec.host = directed_cycle(cycle_order);
  for (int i = 0; i + 1 < cycle_order; ++i) {
    spec.parts.push_back(empty_digraph(part_order));
  }
  spec.parts.push_back(empty_digraph(last_part_order));
  return spec;
}

}  // namespace

FamilyInstance order_value_family(int p, int m) {
  if (p < 3 || m <= 0 || 2 * m > p) {
    Fail(ErrorCode::kNotApplicable,
         "order-value family requires p >= 3 and 0 < m <= p/2 (got p = " +
             std::to_string(p) + ", m = " + std::to_string(m) + ")");
  }
  const int q = p / m;
  const int r = p % m;  // p = mq + r, 0 <= r < m, and q >= 2
  CompositionSpec spec = blown_up_cycle(q, m, m + r);
  FamilyInstance out;
  out.family = "order-value";
  out.digraph = composition(spec).graph;
  out.canonical_partition = composition_partition(spec);
  out.claimed_value = m;
  return out;
}

FamilyInstance critical_composition_family(int p, int n) {
  if (p < 2 || n < 2 || p % n != 0) {
    Fail(ErrorCode::kNotApplicable,
         "critical-composition family requires p >= 2, n >= 2 and n | p "
         "(got p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
  }
  FamilyInstance out;
  out.family = "critical-composition";
  out.claimed_value = n;
  out.claimed_critical = true;
  if (p == n) {
    out.digraph = complete_digraph(p);
    std::vector<int> singletons;
    for (int v = 0; v < p; ++v) singletons.push_back(v);
    out.canonical_partition = VertexPartition::from_assignment(singletons);
    return out;
  }
  CompositionSpec spec = blown_up_cycle(p / n, n, n);
  out.digraph = composition(spec).graph;
  out.canonical_partition = composition_partition(spec);
  return out;
}

FamilyInstance make_family(std::string_view family, int a, int b) {
  FamilyInstance out;
  out.family = std::string(family);
  if (family == "complete") {
    out.digraph = complete_digraph(a);
    std::vector<int> singletons;
    for (int v = 0; v < a; ++v) singletons.push_back(v);
    out.canonical_partition = VertexPartition::from_assignment(singletons);
    out.claimed_value = a;
  } else if (family == "cycle") {
    out.digraph = directed_cycle(a);
    // The cycle of order 2 is the complete digraph K2.
    out.canonical_partition =
        a == 2 ? VertexPartition::from_assignment({0, 1})
               : VertexPartition::from_assignment(std::vector<int>(a, 0));
    out.claimed_value = a == 2 ? 2 : 1;
  } else if (family == "empty") {
    out.digraph = empty_digraph(a);
    if (a == 1) {
      out.canonical_partition = VertexPartition::from_assignment({0});
      out.claimed_value = 1;
    }
  } else if (family == "pair-critical") {
    return pair_critical_family(a);
  } else if (family == "order-value") {
    return order_value_family(a, b);
  } else if (family == "critical-composition") {
    return critical_composition_family(a, b);
  } else {
    Fail(ErrorCode::kInvalidArgument,
         "unknown family '" + std::string(family) + "'");
  }
  return out;
}

void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit) {
  if (n < 1 || n > 5) {
    Fail(ErrorCode::kSizeLimit, "digraph enumeration supports 1 <= n <= 5");
  }
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  ArcSet arcs;
  for (std::uint64_t code = 0; code < total; ++code) {
    arcs.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (code >> i & 1) arcs.push_back(pairs[i]);
    }
    visit(Digraph::create(n, arcs));
  }
}

Digraph random_strong_digraph(int order, std::mt19937_64& rng) {
  if (order < 1) Fail(ErrorCode::kInvalidArgument, "order must be positive");
  std::uniform_real_distribution<double> density(0.25, 0.75);
  while (true) {
    std::bernoulli_distribution coin(density(rng));
    ArcSet arcs;
    for (Vertex u = 0; u < order; ++u) {
      for (Vertex v = 0; v < order; ++v) {
        if (u != v && coin(rng)) arcs.push_back({u, v});
      }
    }
    Digraph d = Digraph::create(order, arcs);
    if (is_strong(d)) return d;
  }
}

}  // namespace sidom
