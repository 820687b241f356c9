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

#include <gtest/gtest.h>

#include "sidom/critical.hpp"
#include "sidom/error.hpp"
#include "sidom/solver.hpp"

namespace sidom {
namespace {

void ExpectClaimsHold(const FamilyInstance& f) {
  SCOPED_TRACE(f.family);
  ASSERT_TRUE(f.claimed_value.has_value());
  EXPECT_EQ(strong_in_domatic_number(f.digraph).value, *f.claimed_value);
  if (f.canonical_partition) {
    EXPECT_TRUE(is_strong_in_domatic_partition(f.digraph, *f.canonical_partition));
    EXPECT_EQ(f.canonical_partition->block_count(), *f.claimed_value);
  }
  if (f.claimed_critical) {
    EXPECT_EQ(is_strong_in_domatic_critical(f.digraph), *f.claimed_critical);
  }
}

TEST(FamiliesTest, BasicGenerators) {
  EXPECT_EQ(complete_digraph(3).arc_count(), 6u);
  EXPECT_EQ(directed_cycle(4).arc_count(), 4u);
  EXPECT_EQ(empty_digraph(2).arc_count(), 0u);
  EXPECT_EQ(directed_cycle(2), complete_digraph(2));
  EXPECT_THROW(complete_digraph(0), Error);
  EXPECT_THROW(directed_cycle(1), Error);
}

TEST(FamiliesTest, PairCritical) {
  auto f = pair_critical_family(3);
  EXPECT_EQ(f.digraph.order(), 6);
  EXPECT_EQ(f.digraph.arc_count(), 18u);
  // u1 = 0, u2 = 1.
  EXPECT_TRUE(f.digraph.has_arc(0, 1));
  EXPECT_FALSE(f.digraph.has_arc(1, 0));
  EXPECT_EQ(f.digraph.label(3), "v1");
  EXPECT_EQ(f.claimed_critical, true);
  ExpectClaimsHold(f);
  ExpectClaimsHold(pair_critical_family(4));
  auto max = enumerate_max_partitions(f.digraph);
  ASSERT_EQ(max.size(), 1u);
  EXPECT_EQ(max[0], f.canonical_partition->canonical());
  EXPECT_THROW(pair_critical_family(2), Error);
}

TEST(FamiliesTest, OrderValue) {
  auto f = order_value_family(7, 3);
  EXPECT_EQ(f.digraph.order(), 7);
  EXPECT_EQ(f.claimed_value, 3);
  EXPECT_FALSE(f.claimed_critical.has_value());
  ExpectClaimsHold(f);
  ExpectClaimsHold(order_value_family(6, 2));
  ExpectClaimsHold(order_value_family(9, 4));
  for (int p = 3; p <= 10; ++p) {
    for (int m = 1; 2 * m <= p; ++m) {
      auto g = order_value_family(p, m);
      EXPECT_EQ(g.digraph.order(), p);
      EXPECT_TRUE(in_dominating_vertices(g.digraph).empty()) << p << "," << m;
      EXPECT_EQ(strong_in_domatic_number(g.digraph).value, m) << p << "," << m;
    }
  }
  try {
    order_value_family(6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotApplicable);
    EXPECT_NE(std::string(e.what()).find("m <= p/2"), std::string::npos);
  }
}

TEST(FamiliesTest, CriticalComposition) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{
           {6, 2}, {6, 3}, {8, 2}, {4, 4}, {9, 3}, {3, 3}}) {
    auto f = critical_composition_family(p, n);
    EXPECT_EQ(f.digraph.order(), p);
    ExpectClaimsHold(f);
  }
  EXPECT_EQ(critical_composition_family(4, 4).digraph, complete_digraph(4));
  EXPECT_THROW(critical_composition_family(6, 4), Error);
  EXPECT_THROW(critical_composition_family(6, 1), Error);
}

TEST(FamiliesTest, CriticalClaimFailsForTheCompleteDigraphOfOrderTwo) {
  // p = n = 2 meets the family's parameter constraints, but deleting either
  // arc of K2 leaves a digraph that is not strong.
  auto f = critical_composition_family(2, 2);
  EXPECT_EQ(f.claimed_critical, true);
  EXPECT_EQ(strong_in_domatic_number(f.digraph).value, 2);
  EXPECT_FALSE(is_strong_in_domatic_critical(f.digraph));
}

TEST(FamiliesTest, Dispatcher) {
  EXPECT_EQ(make_family("complete", 4).claimed_value, 4);
  EXPECT_EQ(make_family("cycle", 5).claimed_value, 1);
  EXPECT_EQ(make_family("cycle", 2).claimed_value, 2);
  EXPECT_FALSE(make_family("empty", 3).claimed_value.has_value());
  EXPECT_EQ(make_family("order-value", 7, 3).digraph.order(), 7);
  EXPECT_THROW(make_family("nope", 3), Error);
  for (const char* name : {"complete", "cycle"}) {
    for (int n = 2; n <= 5; ++n) ExpectClaimsHold(make_family(name, n));
  }
}

TEST(FamiliesTest, Enumeration) {
  long count = 0;
  long strong = 0;
  for_each_digraph(3, [&](const Digraph& d) {
    ++count;
    if (is_strong(d)) ++strong;
  });
  EXPECT_EQ(count, 64);
  EXPECT_EQ(strong, 18);
  EXPECT_THROW(for_each_digraph(6, [](const Digraph&) {}), Error);
}

TEST(FamiliesTest, RandomStrongDigraphsAreStrongAndSeeded) {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int i = 0; i < 20; ++i) {
    Digraph x = random_strong_digraph(6, a);
    EXPECT_TRUE(is_strong(x));
    EXPECT_EQ(x, random_strong_digraph(6, b));
  }
}

}  // namespace
}  // namespace sidom
