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

#ifndef SIDOM_SOLVER_HPP_
#define SIDOM_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sidom/digraph.hpp"
#include "sidom/domination.hpp"

namespace sidom {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

template <class Witness>
struct SolveResult {
  int value = 0;
  Witness witness;  // canonical form, block_count() == value
  SearchStats stats;
};

using VertexSolveResult = SolveResult<VertexPartition>;
using ArcSolveResult = SolveResult<ArcPartition>;

// A strong in-domatic partition with exactly k blocks, if one exists.
// D must be strong and 1 <= k <= order.
std::optional<VertexPartition> exists_partition_into_k(const Digraph& d,
                                                       int k);

// d_s⁻(D). Feasible block counts form the prefix {1, ..., d_s⁻} (merging
// blocks of a valid partition keeps it valid), so the search ascends k and
// stops at the first infeasible count or at upper_bound(D).
VertexSolveResult strong_in_domatic_number(const Digraph& d);
// d_s⁺(D) = d_s⁻(converse(D)); the witness is an out-domatic partition of D.
VertexSolveResult strong_out_domatic_number(const Digraph& d);
// d⁻(D): blocks need only be in-dominating. Any nonempty D.
VertexSolveResult in_domatic_number(const Digraph& d);
// Λ(D): maximum partition of A(D) into strong covers. D strong, >= 1 arc.
ArcSolveResult lambda_number(const Digraph& d);

// Every strong in-domatic partition with d_s⁻(D) blocks, canonical form,
// each set partition reported once.
std::vector<VertexPartition> enumerate_max_partitions(const Digraph& d);
// Every strong in-domatic partition with exactly k blocks.
std::vector<VertexPartition> enumerate_partitions_into_k(const Digraph& d,
                                                         int k);

namespace detail {

// Raw search without the strongness precondition on D. Used where the
// absence of partitions on a non-strong digraph is itself under test.
std::optional<VertexPartition> search_strong_partition(const Digraph& d, int k,
                                                       SearchStats* stats);

}  // namespace detail

}  // namespace sidom

#endif  // SIDOM_SOLVER_HPP_
