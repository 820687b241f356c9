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

#include "sidom/solver.hpp"

#include <gtest/gtest.h>

#include "sidom/bounds.hpp"
#include "sidom/error.hpp"
#include "sidom/families.hpp"
#include "sidom/oracle.hpp"

namespace sidom {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

Digraph Path3() { return Digraph::create(3, {{0, 1}, {1, 2}}); }

TEST(SolverTest, ExistsPartitionIntoK) {
  auto k3 = exists_partition_into_k(complete_digraph(3), 2);
  ASSERT_TRUE(k3.has_value());
  EXPECT_EQ(k3->block_count(), 2);
  EXPECT_TRUE(is_strong_in_domatic_partition(complete_digraph(3), *k3));
  EXPECT_FALSE(exists_partition_into_k(directed_cycle(5), 2).has_value());
  auto whole = exists_partition_into_k(directed_cycle(5), 1);
  ASSERT_TRUE(whole.has_value());
  EXPECT_EQ(whole->block(0), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(CodeOf([] { exists_partition_into_k(complete_digraph(3), 4); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { exists_partition_into_k(complete_digraph(3), 0); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { exists_partition_into_k(Path3(), 1); }),
            ErrorCode::kNotStrong);
}

TEST(SolverTest, CompleteDigraphs) {
  for (int n = 1; n <= 5; ++n) {
    auto r = strong_in_domatic_number(complete_digraph(n));
    EXPECT_EQ(r.value, n);
    EXPECT_EQ(r.witness.block_count(), n);
    EXPECT_TRUE(is_strong_in_domatic_partition(complete_digraph(n), r.witness));
  }
}

TEST(SolverTest, CycleAndPairCritical) {
  EXPECT_EQ(strong_in_domatic_number(directed_cycle(5)).value, 1);
  EXPECT_EQ(brute_force_oracle(directed_cycle(5), Invariant::kStrongInDomatic), 1);
  EXPECT_EQ(strong_in_domatic_number(pair_critical_family(3).digraph).value, 3);
}

TEST(SolverTest, NonStrongInputIsAnError) {
  try {
    strong_in_domatic_number(Path3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStrong);
    EXPECT_NE(std::string(e.what()).find("if and only if it is strong"),
              std::string::npos);
  }
}

TEST(SolverTest, StrongOutDomatic) {
  EXPECT_EQ(strong_out_domatic_number(complete_digraph(4)).value, 4);
  EXPECT_EQ(strong_out_domatic_number(complete_digraph(3)).value, 3);
  auto c5 = strong_out_domatic_number(directed_cycle(5));
  EXPECT_EQ(c5.value, 1);
  EXPECT_EQ(brute_force_oracle(directed_cycle(5), Invariant::kStrongOutDomatic), 1);
  Digraph d = Digraph::create(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 0},
                                  {1, 0}, {3, 2}});
  auto r = strong_out_domatic_number(d);
  EXPECT_TRUE(is_strong_out_domatic_partition(d, r.witness));
  EXPECT_EQ(r.value, brute_force_oracle(d, Invariant::kStrongOutDomatic));
}

TEST(SolverTest, Lambda) {
  auto k3 = lambda_number(complete_digraph(3));
  EXPECT_EQ(k3.value, 2);
  EXPECT_TRUE(is_strong_cover_partition(complete_digraph(3), k3.witness));
  EXPECT_EQ(brute_force_oracle(complete_digraph(3), Invariant::kLambda), 2);
  EXPECT_EQ(lambda_number(directed_cycle(4)).value, 1);
  EXPECT_EQ(lambda_number(complete_digraph(2)).value, 1);
  EXPECT_EQ(brute_force_oracle(complete_digraph(2), Invariant::kLambda), 1);
  EXPECT_EQ(CodeOf([] { lambda_number(Digraph::create(1, {})); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { lambda_number(Path3()); }), ErrorCode::kNotStrong);
}

TEST(SolverTest, InDomatic) {
  EXPECT_EQ(in_domatic_number(complete_digraph(4)).value, 4);
  auto c4 = in_domatic_number(directed_cycle(4));
  EXPECT_EQ(c4.value, 2);
  EXPECT_EQ(brute_force_oracle(directed_cycle(4), Invariant::kInDomatic), 2);
  EXPECT_TRUE(is_in_domatic_partition(directed_cycle(4), c4.witness));
  EXPECT_EQ(in_domatic_number(Digraph::create(1, {})).value, 1);
  // Strongness is not required.
  EXPECT_EQ(in_domatic_number(Path3()).value,
            brute_force_oracle(Path3(), Invariant::kInDomatic));
}

TEST(SolverTest, EnumerateMaxPartitions) {
  auto k3 = enumerate_max_partitions(complete_digraph(3));
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0], VertexPartition::from_assignment({0, 1, 2}));
  auto family = pair_critical_family(3);
  auto pc = enumerate_max_partitions(family.digraph);
  ASSERT_EQ(pc.size(), 1u);
  EXPECT_EQ(pc[0], family.canonical_partition->canonical());
  auto c4 = enumerate_max_partitions(directed_cycle(4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].block_count(), 1);
}

TEST(SolverTest, EnumerationCountsMatchBruteForce) {
  // K4 has 15 set partitions; those with two blocks are all valid since
  // every nonempty subset of a complete digraph is strong in-dominating.
  EXPECT_EQ(enumerate_partitions_into_k(complete_digraph(4), 2).size(), 7u);
  EXPECT_EQ(enumerate_partitions_into_k(complete_digraph(4), 3).size(), 6u);
}

TEST(SolverTest, WitnessIsDeterministic) {
  Digraph d = pair_critical_family(4).digraph;
  auto a = strong_in_domatic_number(d);
  auto b = strong_in_domatic_number(d);
  EXPECT_EQ(a.value, 4);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.witness, a.witness.canonical());
}

TEST(SolverTest, RawSearchOnNonStrongDigraph) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_FALSE(detail::search_strong_partition(Path3(), k, nullptr).has_value());
  }
}

TEST(BoundsTest, Examples) {
  EXPECT_EQ(upper_bound(directed_cycle(5)), 1);
  EXPECT_EQ(upper_bound(complete_digraph(4)), 4);
  EXPECT_GE(upper_bound(pair_critical_family(3).digraph), 3);
  EXPECT_EQ(CodeOf([] { upper_bound(Path3()); }), ErrorCode::kNotStrong);
}

TEST(OracleTest, Examples) {
  EXPECT_EQ(brute_force_oracle(complete_digraph(4), Invariant::kStrongInDomatic), 4);
  EXPECT_EQ(brute_force_oracle(directed_cycle(5), Invariant::kStrongInDomatic), 1);
  EXPECT_EQ(brute_force_oracle(complete_digraph(3), Invariant::kLambda), 2);
}

TEST(OracleTest, Caps) {
  EXPECT_EQ(CodeOf([] {
              brute_force_oracle(directed_cycle(7), Invariant::kStrongInDomatic);
            }),
            ErrorCode::kSizeLimit);
  EXPECT_EQ(CodeOf([] {
              brute_force_oracle(complete_digraph(5), Invariant::kLambda);
            }),
            ErrorCode::kSizeLimit);
  EXPECT_EQ(CodeOf([] {
              brute_force_oracle(Path3(), Invariant::kStrongInDomatic);
            }),
            ErrorCode::kNotStrong);
}

TEST(OracleTest, ScanOrderThree) {
  OracleScanOptions options;
  options.max_n = 3;
  auto summary = run_oracle_scan(options);
  EXPECT_EQ(summary.scanned, 64);
  EXPECT_EQ(summary.strong, 18);
  EXPECT_EQ(summary.mismatches, 0);
}

TEST(OracleTest, RandomScanIsReproducible) {
  OracleScanOptions options;
  options.max_n = 3;
  options.seed = 11;
  options.random_count = 15;
  options.random_up_to = 5;
  options.lambda_max_arcs = 9;
  auto a = run_oracle_scan(options);
  auto b = run_oracle_scan(options);
  EXPECT_EQ(a.mismatches, 0);
  EXPECT_EQ(a.random_checked, 15);
  EXPECT_EQ(a.lambda_compared, b.lambda_compared);
}

}  // namespace
}  // namespace sidom
