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

#include "sidom/domination.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sidom/error.hpp"

namespace sidom {

namespace {

std::vector<int> relabel_by_first_occurrence(const std::vector<int>& block_of,
                                             int block_count) {
  std::vector<int> rename(static_cast<std::size_t>(block_count), -1);
  int next = 0;
  std::vector<int> out(block_of.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    int& r = rename[block_of[i]];
    if (r == -1) r = next++;
    out[i] = r;
  }
  return out;
}

int validate_assignment(const std::vector<int>& block_of) {
  int k = 0;
  for (int b : block_of) {
    if (b < 0) Fail(ErrorCode::kInvalidArgument, "negative block index");
    k = std::max(k, b + 1);
  }
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  for (int b : block_of) used[b] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    Fail(ErrorCode::kInvalidArgument, "partition has an empty block");
  }
  return k;
}

std::vector<char> membership(const Digraph& d, const VertexSet& s) {
  if (s.empty()) Fail(ErrorCode::kInvalidArgument, "empty vertex set");
  std::vector<char> in(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : s) {
    if (!d.contains(v)) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " is not in the digraph");
    }
    if (in[v]) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " repeated in set");
    }
    in[v] = 1;
  }
  return in;
}

// First vertex outside S lacking an out-neighbor (forward) or in-neighbor
// (backward) inside S; -1 if none.
Vertex first_undominated(const Digraph& d, const std::vector<char>& in,
                         bool forward) {
  for (Vertex x = 0; x < d.order(); ++x) {
    if (in[x]) continue;
    auto nbrs = forward ? d.out_neighbors(x) : d.in_neighbors(x);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex z) { return in[z] != 0; })) {
      return x;
    }
  }
  return -1;
}

bool strong_inside(const Digraph& d, const VertexSet& s) {
  if (s.size() == 1) return true;
  return is_strong(induced_subdigraph(d, s).graph);
}

void check_shape(const Digraph& d, const VertexPartition& p) {
  if (p.order() != d.order() || p.block_count() == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "partition covers " + std::to_string(p.order()) +
             " vertices but the digraph has " + std::to_string(d.order()));
  }
}

PartitionDiagnostics check_partition(const Digraph& d, const VertexPartition& p,
                                     bool forward, bool need_strong) {
  check_shape(d, p);
  PartitionDiagnostics diag;
  for (int j = 0; j < p.block_count(); ++j) {
    VertexSet block = p.block(j);
    Vertex x = first_undominated(d, membership(d, block), forward);
    if (x != -1) {
      return {false, j, BlockFailure::kNotDominating, x};
    }
    if (need_strong && !strong_inside(d, block)) {
      return {false, j, BlockFailure::kNotStrong, -1};
    }
  }
  return diag;
}

}  // namespace

VertexPartition VertexPartition::from_blocks(
    int order, const std::vector<VertexSet>& blocks) {
  if (order < 0) Fail(ErrorCode::kInvalidArgument, "negative order");
  std::vector<int> block_of(static_cast<std::size_t>(order), -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "block " + std::to_string(j) + " is empty");
    }
    for (Vertex v : blocks[j]) {
      if (v < 0 || v >= order) {
        Fail(ErrorCode::kInvalidArgument,
             "vertex " + std::to_string(v) + " is out of range");
      }
      if (block_of[v] != -1) {
        Fail(ErrorCode::kInvalidArgument,
             "vertex " + std::to_string(v) + " appears in two blocks");
      }
      block_of[v] = static_cast<int>(j);
    }
  }
  for (Vertex v = 0; v < order; ++v) {
    if (block_of[v] == -1) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " is in no block");
    }
  }
  VertexPartition p;
  p.block_of_ = std::move(block_of);
  p.block_count_ = static_cast<int>(blocks.size());
  return p;
}

VertexPartition VertexPartition::from_assignment(std::vector<int> block_of) {
  VertexPartition p;
  p.block_count_ = validate_assignment(block_of);
  p.block_of_ = std::move(block_of);
  return p;
}

VertexSet VertexPartition::block(int j) const {
  if (j < 0 || j >= block_count_) {
    Fail(ErrorCode::kInvalidArgument, "block index out of range");
  }
  VertexSet s;
  for (Vertex v = 0; v < order(); ++v) {
    if (block_of_[v] == j) s.push_back(v);
  }
  return s;
}

std::vector<VertexSet> VertexPartition::blocks() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(block_count_));
  for (Vertex v = 0; v < order(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

VertexPartition VertexPartition::canonical() const {
  VertexPartition p;
  p.block_count_ = block_count_;
  p.block_of_ = relabel_by_first_occurrence(block_of_, block_count_);
  return p;
}

ArcPartition ArcPartition::from_blocks(const Digraph& d,
                                       const std::vector<ArcSet>& blocks) {
  std::vector<int> block_of(d.arc_count(), -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "arc block " + std::to_string(j) + " is empty");
    }
    for (const Arc& a : blocks[j]) {
      auto idx = d.arc_index(a);
      if (!idx) {
        Fail(ErrorCode::kInvalidArgument,
             "(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                 ") is not an arc of the digraph");
      }
      if (block_of[*idx] != -1) {
        Fail(ErrorCode::kInvalidArgument, "arc appears in two blocks");
      }
      block_of[*idx] = static_cast<int>(j);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
    Fail(ErrorCode::kInvalidArgument, "some arc is in no block");
  }
  ArcPartition q;
  q.block_of_ = std::move(block_of);
  q.block_count_ = static_cast<int>(blocks.size());
  return q;
}

ArcPartition ArcPartition::from_assignment(std::vector<int> block_of) {
  ArcPartition q;
  q.block_count_ = validate_assignment(block_of);
  q.block_of_ = std::move(block_of);
  return q;
}

std::vector<ArcSet> ArcPartition::blocks(const Digraph& d) const {
  if (d.arc_count() != block_of_.size()) {
    Fail(ErrorCode::kInvalidArgument, "arc partition does not match digraph");
  }
  std::vector<ArcSet> out(static_cast<std::size_t>(block_count_));
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    out[block_of_[i]].push_back(d.arcs()[i]);
  }
  return out;
}

ArcPartition ArcPartition::canonical() const {
  ArcPartition q;
  q.block_count_ = block_count_;
  q.block_of_ = relabel_by_first_occurrence(block_of_, block_count_);
  return q;
}

std::string PartitionDiagnostics::message() const {
  switch (reason) {
    case BlockFailure::kNone:
      return "valid";
    case BlockFailure::kNotDominating:
      return "block " + std::to_string(failing_block) +
             " not dominating: vertex " + std::to_string(undominated) +
             " has no neighbor in it";
    case BlockFailure::kNotStrong:
      return "block " + std::to_string(failing_block) + " not strong";
  }
  return {};
}

bool is_in_dominating(const Digraph& d, const VertexSet& s) {
  return first_undominated(d, membership(d, s), true) == -1;
}

bool is_out_dominating(const Digraph& d, const VertexSet& s) {
  return first_undominated(d, membership(d, s), false) == -1;
}

bool is_strong_in_dominating(const Digraph& d, const VertexSet& s) {
  return is_in_dominating(d, s) && strong_inside(d, s);
}

bool is_strong_out_dominating(const Digraph& d, const VertexSet& s) {
  return is_out_dominating(d, s) && strong_inside(d, s);
}

PartitionDiagnostics check_strong_in_domatic_partition(
    const Digraph& d, const VertexPartition& p) {
  return check_partition(d, p, true, true);
}

PartitionDiagnostics check_strong_out_domatic_partition(
    const Digraph& d, const VertexPartition& p) {
  return check_partition(d, p, false, true);
}

bool is_strong_in_domatic_partition(const Digraph& d,
                                    const VertexPartition& p) {
  return check_strong_in_domatic_partition(d, p).valid;
}

bool is_strong_out_domatic_partition(const Digraph& d,
                                     const VertexPartition& p) {
  return check_strong_out_domatic_partition(d, p).valid;
}

bool is_in_domatic_partition(const Digraph& d, const VertexPartition& p) {
  return check_partition(d, p, true, false).valid;
}

VertexSet in_dominating_vertices(const Digraph& d) {
  VertexSet out;
  const auto n = static_cast<std::size_t>(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) + 1 == static_cast<int>(n)) out.push_back(v);
  }
  return out;
}

namespace {

bool spans_strongly(const Digraph& d, const ArcSet& e) {
  std::vector<char> touched(static_cast<std::size_t>(d.order()), 0);
  int covered = 0;
  for (const Arc& a : e) {
    for (Vertex v : {a.tail, a.head}) {
      if (!touched[v]) {
        touched[v] = 1;
        ++covered;
      }
    }
  }
  if (covered != d.order()) return false;
  return is_strong(arc_induced_subdigraph(d, e).graph);
}

}  // namespace

bool is_strong_cover(const Digraph& d, const ArcSet& e) {
  if (e.empty()) Fail(ErrorCode::kInvalidArgument, "empty arc set");
  if (!is_strong(d)) Fail(ErrorCode::kNotStrong, "strong covers need a strong digraph");
  for (const Arc& a : e) {
    if (!d.has_arc(a)) Fail(ErrorCode::kInvalidArgument, "arc not in digraph");
  }
  return spans_strongly(d, e);
}

bool is_strong_cover_partition(const Digraph& d, const ArcPartition& q) {
  if (d.arc_count() == 0) {
    Fail(ErrorCode::kInvalidArgument, "digraph has no arcs");
  }
  if (q.arc_count() != d.arc_count()) {
    Fail(ErrorCode::kInvalidArgument, "arc partition size differs from digraph");
  }
  if (!is_strong(d)) Fail(ErrorCode::kNotStrong, "strong covers need a strong digraph");
  for (const ArcSet& block : q.blocks(d)) {
    if (!spans_strongly(d, block)) return false;
  }
  return true;
}

}  // namespace sidom
