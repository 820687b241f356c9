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

#ifndef SIDOM_DOMINATION_HPP_
#define SIDOM_DOMINATION_HPP_

#include <string>
#include <vector>

#include "sidom/digraph.hpp"

namespace sidom {

// Partition of [0, order) into block_count() nonempty indexed blocks.
class VertexPartition {
 public:
  VertexPartition() = default;

  // `blocks` must be pairwise disjoint, nonempty and cover [0, order).
  static VertexPartition from_blocks(int order,
                                     const std::vector<VertexSet>& blocks);
  // block_of[v] in [0, k) with every index used at least once.
  static VertexPartition from_assignment(std::vector<int> block_of);

  int order() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  int block_of(Vertex v) const { return block_of_.at(v); }
  const std::vector<int>& assignment() const { return block_of_; }
  VertexSet block(int j) const;
  std::vector<VertexSet> blocks() const;

  // Same partition with blocks ordered by their minimum member.
  VertexPartition canonical() const;

  friend bool operator==(const VertexPartition&,
                         const VertexPartition&) = default;

 private:
  std::vector<int> block_of_;
  int block_count_ = 0;
};

// Partition of A(D) into nonempty blocks; block_of is indexed by the arc's
// position in Digraph::arcs().
class ArcPartition {
 public:
  ArcPartition() = default;

  static ArcPartition from_blocks(const Digraph& d,
                                  const std::vector<ArcSet>& blocks);
  static ArcPartition from_assignment(std::vector<int> block_of);

  std::size_t arc_count() const { return block_of_.size(); }
  int block_count() const { return block_count_; }
  int block_of(std::size_t arc_index) const { return block_of_.at(arc_index); }
  const std::vector<int>& assignment() const { return block_of_; }
  std::vector<ArcSet> blocks(const Digraph& d) const;
  ArcPartition canonical() const;

  friend bool operator==(const ArcPartition&, const ArcPartition&) = default;

 private:
  std::vector<int> block_of_;
  int block_count_ = 0;
};

// S in-dominates D when every x outside S has an out-neighbor in S, i.e. an
// arc (x, z) with z in S.
bool is_in_dominating(const Digraph& d, const VertexSet& s);
// Dual: every x outside S has an in-neighbor in S.
bool is_out_dominating(const Digraph& d, const VertexSet& s);

bool is_strong_in_dominating(const Digraph& d, const VertexSet& s);
bool is_strong_out_dominating(const Digraph& d, const VertexSet& s);

enum class BlockFailure { kNone, kNotDominating, kNotStrong };

struct PartitionDiagnostics {
  bool valid = true;
  int failing_block = -1;
  BlockFailure reason = BlockFailure::kNone;
  // For kNotDominating: a vertex outside the block with no suitable neighbor.
  Vertex undominated = -1;

  std::string message() const;
};

PartitionDiagnostics check_strong_in_domatic_partition(
    const Digraph& d, const VertexPartition& p);
PartitionDiagnostics check_strong_out_domatic_partition(
    const Digraph& d, const VertexPartition& p);

bool is_strong_in_domatic_partition(const Digraph& d, const VertexPartition& p);
bool is_strong_out_domatic_partition(const Digraph& d,
                                     const VertexPartition& p);
// Plain in-domatic partition: strongness of blocks not required.
bool is_in_domatic_partition(const Digraph& d, const VertexPartition& p);

// { v : {v} is in-dominating }.
VertexSet in_dominating_vertices(const Digraph& d);

// D[E] spans D and is strong. D must be strong.
bool is_strong_cover(const Digraph& d, const ArcSet& e);
bool is_strong_cover_partition(const Digraph& d, const ArcPartition& q);

}  // namespace sidom

#endif  // SIDOM_DOMINATION_HPP_
