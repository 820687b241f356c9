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

#include <gtest/gtest.h>

#include "sidom/error.hpp"
#include "sidom/families.hpp"
#include "sidom/solver.hpp"

namespace sidom {
namespace {

VertexPartition Singletons(int n) {
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = v;
  return VertexPartition::from_assignment(a);
}

VertexPartition Whole(int n) {
  return VertexPartition::from_assignment(std::vector<int>(n, 0));
}

TEST(ProductTest, Examples) {
  auto kk = cartesian_product(complete_digraph(2), complete_digraph(2));
  EXPECT_EQ(kk.graph.order(), 4);
  EXPECT_EQ(kk.graph.arc_count(), 8u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(kk.graph.out_degree(v), 2);
  Digraph c4 = directed_cycle(4);
  EXPECT_TRUE(are_isomorphic(cartesian_product(c4, Digraph::create(1, {})).graph, c4));
  auto cc = cartesian_product(directed_cycle(3), directed_cycle(3));
  EXPECT_EQ(cc.graph.order(), 9);
  EXPECT_EQ(cc.graph.arc_count(), 18u);
  EXPECT_EQ(cc.coords[cc.id(2, 1)], (std::pair<Vertex, Vertex>{2, 1}));
  EXPECT_EQ(kk.graph.label(kk.id(1, 0)), "(1,0)");
  EXPECT_THROW(cartesian_product(Digraph::create(0, {}), c4), Error);
}

TEST(ProductTest, LevelsAreCopiesOfFactors) {
  Digraph d = Digraph::create(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  Digraph h = complete_digraph(2);
  auto p = cartesian_product(d, h);
  for (Vertex x = 0; x < d.order(); ++x) {
    EXPECT_EQ(induced_subdigraph(p.graph, {p.id(x, 0), p.id(x, 1)}).graph, h);
  }
  for (Vertex y = 0; y < h.order(); ++y) {
    VertexSet level;
    for (Vertex x = 0; x < d.order(); ++x) level.push_back(p.id(x, y));
    EXPECT_EQ(induced_subdigraph(p.graph, level).graph, d);
  }
}

TEST(CompositionTest, Examples) {
  CompositionSpec spec{directed_cycle(3),
                       {empty_digraph(2), empty_digraph(2), empty_digraph(2)}};
  auto comp = composition(spec);
  EXPECT_EQ(comp.graph.order(), 6);
  EXPECT_EQ(comp.graph.arc_count(), 12u);
  Digraph p = directed_cycle(4);
  EXPECT_EQ(composition({Digraph::create(1, {}), {p}}).graph, p);
  VertexSet reps;
  for (Vertex v = 0; v < 3; ++v) reps.push_back(comp.id(v, 1));
  EXPECT_EQ(induced_subdigraph(comp.graph, reps).graph, directed_cycle(3));
  EXPECT_EQ(comp.origin[comp.id(2, 1)], (std::pair<Vertex, Vertex>{2, 1}));
  EXPECT_THROW(composition({directed_cycle(3), {empty_digraph(2)}}), Error);
}

TEST(LineDigraphTest, Examples) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_TRUE(are_isomorphic(line_digraph(directed_cycle(n)).graph,
                               directed_cycle(n)));
  }
  EXPECT_EQ(line_digraph(complete_digraph(2)).graph, complete_digraph(2));
  Digraph k3 = complete_digraph(3);
  auto line = line_digraph(k3);
  EXPECT_EQ(line.graph.order(), 6);
  EXPECT_EQ(line.arc_of, k3.arcs());
  EXPECT_THROW(line_digraph(Digraph::create(2, {})), Error);
}

TEST(MixedDigraphTest, Subdivision) {
  auto s = subdivision(directed_cycle(3));
  EXPECT_TRUE(are_isomorphic(s.graph, directed_cycle(6)));
  EXPECT_EQ(s.tags[0], TaggedVertex::original(0));
  EXPECT_EQ(s.tags[s.arc_vertex(1)], TaggedVertex::of_arc({1, 2}));
  EXPECT_THROW(subdivision(Digraph::create(2, {})), Error);
}

TEST(MixedDigraphTest, RootOutDegrees) {
  auto r = root(directed_cycle(3));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(r.graph.out_degree(v), 2);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(r.graph.out_degree(r.arc_vertex(i)), 1);
  }
}

TEST(MixedDigraphTest, SpanningInclusions) {
  Digraph d = Digraph::create(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  auto s = subdivision(d);
  auto r = root(d);
  auto q = middle(d);
  auto t = total(d);
  auto contained = [](const Digraph& small, const Digraph& big) {
    if (small.order() != big.order()) return false;
    for (const Arc& a : small.arcs()) {
      if (!big.has_arc(a)) return false;
    }
    return true;
  };
  EXPECT_TRUE(contained(s.graph, r.graph));
  EXPECT_TRUE(contained(s.graph, q.graph));
  EXPECT_TRUE(contained(q.graph, t.graph));
  EXPECT_TRUE(contained(r.graph, t.graph));
  EXPECT_EQ(arc_vertex_subdigraph(t).graph, line_digraph(d).graph);
  EXPECT_EQ(arc_vertex_subdigraph(q).graph, line_digraph(d).graph);
}

TEST(MixedDigraphTest, TotalArcVerticesFormLineDigraphOfK3) {
  auto t = total(complete_digraph(3));
  EXPECT_TRUE(are_isomorphic(arc_vertex_subdigraph(t).graph,
                             line_digraph(complete_digraph(3)).graph));
}

TEST(LiftTest, Product) {
  auto kk = lift_product_partition(Singletons(2), complete_digraph(2),
                                   complete_digraph(2));
  EXPECT_EQ(kk.block_count(), 2);
  EXPECT_EQ(kk.block(0).size(), 2u);
  auto kkp = cartesian_product(complete_digraph(2), complete_digraph(2));
  EXPECT_TRUE(is_strong_in_domatic_partition(kkp.graph, kk));

  auto cc = lift_product_partition(Whole(3), directed_cycle(3), directed_cycle(3));
  EXPECT_EQ(cc.block_count(), 1);

  auto kc = lift_product_partition(Singletons(3), complete_digraph(3),
                                   directed_cycle(3));
  EXPECT_EQ(kc.block_count(), 3);
  EXPECT_EQ(kc.block(1).size(), 3u);
  EXPECT_TRUE(is_strong_in_domatic_partition(
      cartesian_product(complete_digraph(3), directed_cycle(3)).graph, kc));

  EXPECT_THROW(lift_product_partition(Singletons(3), directed_cycle(3),
                                      directed_cycle(3)),
               Error);
}

TEST(LiftTest, Composition) {
  CompositionSpec c3{directed_cycle(3),
                     {empty_digraph(2), empty_digraph(2), empty_digraph(2)}};
  auto p = composition_partition(c3);
  auto graph = composition(c3).graph;
  EXPECT_EQ(p.block_count(), 2);
  for (const VertexSet& block : p.blocks()) {
    EXPECT_TRUE(are_isomorphic(induced_subdigraph(graph, block).graph,
                               directed_cycle(3)));
  }
  EXPECT_TRUE(is_strong_in_domatic_partition(graph, p));

  CompositionSpec c2{directed_cycle(2), {empty_digraph(3), empty_digraph(4)}};
  auto q = composition_partition(c2);
  EXPECT_EQ(q.block_count(), 3);
  EXPECT_TRUE(is_strong_in_domatic_partition(composition(c2).graph, q));

  CompositionSpec thin{directed_cycle(3),
                       {empty_digraph(1), empty_digraph(2), empty_digraph(3)}};
  EXPECT_EQ(composition_partition(thin).block_count(), 1);

  EXPECT_THROW(composition_partition({Digraph::create(1, {}), {empty_digraph(2)}}),
               Error);
}

TEST(LiftTest, Middle) {
  Digraph c3 = directed_cycle(3);
  auto one = lift_middle_partition(Whole(3), c3);
  EXPECT_EQ(one.block_count(), 1);
  EXPECT_TRUE(is_strong_in_domatic_partition(middle(c3).graph, one));

  Digraph k3 = complete_digraph(3);
  auto line = strong_in_domatic_number(line_digraph(k3).graph);
  ASSERT_EQ(line.value, 2);
  auto lifted = lift_middle_partition(line.witness, k3);
  EXPECT_EQ(lifted.block_count(), 2);
  EXPECT_TRUE(is_strong_in_domatic_partition(middle(k3).graph, lifted));
  EXPECT_THROW(lift_middle_partition(Singletons(3), c3), Error);
}

TEST(LiftTest, Total) {
  Digraph c3 = directed_cycle(3);
  auto two = lift_total_partition(Whole(3), c3);
  EXPECT_EQ(two.block_count(), 2);
  EXPECT_TRUE(is_strong_in_domatic_partition(total(c3).graph, two));
  EXPECT_EQ(two.block(0), (VertexSet{0, 1, 2}));

  Digraph k3 = complete_digraph(3);
  auto line = strong_in_domatic_number(line_digraph(k3).graph);
  auto lifted = lift_total_partition(line.witness, k3);
  EXPECT_EQ(lifted.block_count(), line.value + 1);
  EXPECT_TRUE(is_strong_in_domatic_partition(total(k3).graph, lifted));

  EXPECT_THROW(lift_total_partition(Whole(2), complete_digraph(2)), Error);
}

}  // namespace
}  // namespace sidom
