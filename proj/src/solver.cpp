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

#include <algorithm>
#include <bit>
#include <string>

#include "sidom/bounds.hpp"
#include "sidom/error.hpp"

namespace sidom {

namespace {

using Clock = std::chrono::steady_clock;

void require_strong(const Digraph& d) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  if (!is_strong(d)) Fail(ErrorCode::kNotStrong, kNoPartitionMessage);
}

void require_mask_capacity(int size, const char* what) {
  if (size > kMaskCapacity) {
    Fail(ErrorCode::kSizeLimit, std::string(what) + " exceeds the search cap of " +
                                    std::to_string(kMaskCapacity));
  }
}

VertexMask low_bits(int count) {
  return count >= kMaskCapacity ? ~VertexMask{0}
                                : (VertexMask{1} << count) - 1;
}

// Backtracking over vertex -> block assignments. Vertex v may open block j
// only if blocks 0..j-1 are already open, so each set partition is visited
// once. A branch dies as soon as some vertex can no longer reach every block
// it must have an out-neighbor in.
class VertexSearch {
 public:
  VertexSearch(const Digraph& d, int k, bool need_strong, bool collect_all,
               SearchStats* stats)
      : d_(d),
        n_(d.order()),
        k_(k),
        need_strong_(need_strong),
        collect_all_(collect_all),
        stats_(stats),
        block_(static_cast<std::size_t>(k), 0),
        owner_(static_cast<std::size_t>(d.order()), -1),
        unassigned_(low_bits(d.order())) {}

  bool run() { return assign(0, 0); }

  std::optional<VertexPartition> first() const {
    if (found_.empty()) return std::nullopt;
    return found_.front();
  }
  std::vector<VertexPartition>& all() { return found_; }

 private:
  bool consistent(Vertex v, int j) const {
    for (Vertex x = 0; x < n_; ++x) {
      const VertexMask out = d_.out_mask(x);
      const int b = owner_[x];
      int missing = 0;
      for (int i = 0; i < k_; ++i) {
        if (i == b) continue;
        if ((out & (block_[i] | unassigned_)) == 0) ++missing;
      }
      if (b >= 0) {
        if (missing > 0) return false;
        if (need_strong_ && std::popcount(block_[b]) >= 2) {
          const VertexMask room = block_[b] | unassigned_;
          if ((out & room) == 0 || (d_.in_mask(x) & room) == 0) return false;
        }
      } else if (missing > 1) {
        return false;
      }
    }
    if (need_strong_ && std::popcount(block_[j]) >= 2) {
      // Members of block j must stay mutually reachable through block j and
      // the unassigned vertices.
      const VertexMask room = block_[j] | unassigned_;
      if ((closure(v, room, true) & block_[j]) != block_[j]) return false;
      if ((closure(v, room, false) & block_[j]) != block_[j]) return false;
    }
    return true;
  }

  VertexMask closure(Vertex start, VertexMask room, bool forward) const {
    VertexMask seen = bit(start);
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) {
        const Vertex x = std::countr_zero(f);
        next |= forward ? d_.out_mask(x) : d_.in_mask(x);
      }
      next &= room & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool leaf() {
    if (need_strong_) {
      for (VertexMask m : block_) {
        if (std::popcount(m) >= 2 && !induces_strong(d_, m)) return false;
      }
    }
    found_.push_back(VertexPartition::from_assignment(owner_).canonical());
    return !collect_all_;
  }

  bool assign(Vertex v, int open) {
    if (stats_ != nullptr) ++stats_->nodes;
    if (v == n_) return open == k_ && leaf();
    if (open + (n_ - v) < k_) return false;
    const int limit = std::min(open + 1, k_);
    for (int j = 0; j < limit; ++j) {
      block_[j] |= bit(v);
      unassigned_ &= ~bit(v);
      owner_[v] = j;
      const bool done =
          consistent(v, j) && assign(v + 1, std::max(open, j + 1));
      block_[j] &= ~bit(v);
      unassigned_ |= bit(v);
      owner_[v] = -1;
      if (done) return true;
    }
    return false;
  }

  const Digraph& d_;
  const int n_;
  const int k_;
  const bool need_strong_;
  const bool collect_all_;
  SearchStats* stats_;
  std::vector<VertexMask> block_;
  std::vector<int> owner_;
  VertexMask unassigned_;
  std::vector<VertexPartition> found_;
};

// Same skeleton over arcs: every block must keep, for each vertex, a
// possible outgoing and incoming arc (a spanning strong subdigraph needs
// both); full strongness is checked at the leaves.
class ArcSearch {
 public:
  ArcSearch(const Digraph& d, int k, SearchStats* stats)
      : d_(d),
        m_(static_cast<int>(d.arc_count())),
        k_(k),
        stats_(stats),
        out_arcs_(static_cast<std::size_t>(d.order()), 0),
        in_arcs_(static_cast<std::size_t>(d.order()), 0),
        block_(static_cast<std::size_t>(k), 0),
        owner_(d.arc_count(), -1),
        unassigned_(low_bits(m_)) {
    for (int i = 0; i < m_; ++i) {
      out_arcs_[d.arcs()[i].tail] |= bit(i);
      in_arcs_[d.arcs()[i].head] |= bit(i);
    }
  }

  bool run() { return assign(0, 0); }
  std::optional<ArcPartition> result() const { return result_; }

 private:
  bool consistent() const {
    for (Vertex v = 0; v < d_.order(); ++v) {
      for (int j = 0; j < k_; ++j) {
        const VertexMask room = block_[j] | unassigned_;
        if ((out_arcs_[v] & room) == 0 || (in_arcs_[v] & room) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool block_strong(VertexMask arcs) const {
    std::vector<VertexMask> out(static_cast<std::size_t>(d_.order()), 0);
    std::vector<VertexMask> in(static_cast<std::size_t>(d_.order()), 0);
    for (VertexMask a = arcs; a != 0; a &= a - 1) {
      const Arc& arc = d_.arcs()[std::countr_zero(a)];
      out[arc.tail] |= bit(arc.head);
      in[arc.head] |= bit(arc.tail);
    }
    const VertexMask all = d_.all_mask();
    for (const auto* adj : {&out, &in}) {
      VertexMask seen = 1, frontier = 1;
      while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) {
          next |= (*adj)[std::countr_zero(f)];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
      }
      if (seen != all) return false;
    }
    return true;
  }

  bool assign(int a, int open) {
    if (stats_ != nullptr) ++stats_->nodes;
    if (a == m_) {
      if (open != k_) return false;
      for (VertexMask b : block_) {
        if (!block_strong(b)) return false;
      }
      result_ = ArcPartition::from_assignment(owner_).canonical();
      return true;
    }
    if (open + (m_ - a) < k_) return false;
    const int limit = std::min(open + 1, k_);
    for (int j = 0; j < limit; ++j) {
      block_[j] |= bit(a);
      unassigned_ &= ~bit(a);
      owner_[a] = j;
      const bool done = consistent() && assign(a + 1, std::max(open, j + 1));
      block_[j] &= ~bit(a);
      unassigned_ |= bit(a);
      owner_[a] = -1;
      if (done) return true;
    }
    return false;
  }

  const Digraph& d_;
  const int m_;
  const int k_;
  SearchStats* stats_;
  std::vector<VertexMask> out_arcs_;
  std::vector<VertexMask> in_arcs_;
  std::vector<VertexMask> block_;
  std::vector<int> owner_;
  VertexMask unassigned_;
  std::optional<ArcPartition> result_;
};

VertexPartition whole(const Digraph& d) {
  return VertexPartition::from_assignment(
      std::vector<int>(static_cast<std::size_t>(d.order()), 0));
}

std::optional<VertexPartition> search(const Digraph& d, int k, bool need_strong,
                                      SearchStats* stats) {
  VertexSearch s(d, k, need_strong, false, stats);
  s.run();
  return s.first();
}

// Ascending scan over k, starting from the known-feasible single block.
VertexSolveResult ascend(const Digraph& d, int cap, bool need_strong) {
  const auto start = Clock::now();
  VertexSolveResult result{1, whole(d), {}};
  for (int k = 2; k <= cap; ++k) {
    auto found = search(d, k, need_strong, &result.stats);
    if (!found) break;
    result.value = k;
    result.witness = *found;
  }
  result.stats.elapsed = Clock::now() - start;
  return result;
}

}  // namespace

namespace detail {

std::optional<VertexPartition> search_strong_partition(const Digraph& d, int k,
                                                       SearchStats* stats) {
  require_mask_capacity(d.order(), "digraph order");
  if (k < 1 || k > d.order()) return std::nullopt;
  return search(d, k, true, stats);
}

}  // namespace detail

std::optional<VertexPartition> exists_partition_into_k(const Digraph& d,
                                                       int k) {
  require_strong(d);
  require_mask_capacity(d.order(), "digraph order");
  if (k < 1 || k > d.order()) {
    Fail(ErrorCode::kInvalidArgument,
         "block count " + std::to_string(k) + " outside [1," +
             std::to_string(d.order()) + "]");
  }
  if (k == 1) return whole(d);
  return search(d, k, true, nullptr);
}

VertexSolveResult strong_in_domatic_number(const Digraph& d) {
  require_strong(d);
  require_mask_capacity(d.order(), "digraph order");
  return ascend(d, upper_bound(d), true);
}

VertexSolveResult strong_out_domatic_number(const Digraph& d) {
  return strong_in_domatic_number(converse(d));
}

VertexSolveResult in_domatic_number(const Digraph& d) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  require_mask_capacity(d.order(), "digraph order");
  // Zelinka: d⁻(D) <= δ⁺(D) + 1.
  return ascend(d, min_out_degree(d) + 1, false);
}

ArcSolveResult lambda_number(const Digraph& d) {
  require_strong(d);
  if (d.arc_count() == 0) {
    Fail(ErrorCode::kInvalidArgument, "digraph has no arcs");
  }
  require_mask_capacity(static_cast<int>(d.arc_count()), "arc count");
  const auto start = Clock::now();
  ArcSolveResult result{
      1, ArcPartition::from_assignment(std::vector<int>(d.arc_count(), 0)), {}};
  // Each block holds an out-arc and an in-arc of every vertex, and at
  // least order() arcs.
  const int cap = std::min({min_out_degree(d), min_in_degree(d),
                            static_cast<int>(d.arc_count()) / d.order()});
  for (int k = 2; k <= cap; ++k) {
    ArcSearch s(d, k, &result.stats);
    if (!s.run()) break;
    result.value = k;
    result.witness = *s.result();
  }
  result.stats.elapsed = Clock::now() - start;
  return result;
}

std::vector<VertexPartition> enumerate_partitions_into_k(const Digraph& d,
                                                         int k) {
  require_strong(d);
  require_mask_capacity(d.order(), "digraph order");
  if (k < 1 || k > d.order()) return {};
  VertexSearch s(d, k, true, true, nullptr);
  s.run();
  auto out = std::move(s.all());
  std::sort(out.begin(), out.end(),
            [](const VertexPartition& a, const VertexPartition& b) {
              return a.assignment() < b.assignment();
            });
  return out;
}

std::vector<VertexPartition> enumerate_max_partitions(const Digraph& d) {
  return enumerate_partitions_into_k(d, strong_in_domatic_number(d).value);
}

}  // namespace sidom
