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

#include "sidom/critical.hpp"

#include <sstream>

#include "sidom/error.hpp"
#include "sidom/solver.hpp"

namespace sidom {

DeletionProfile deletion_profile(const Digraph& d) {
  if (d.order() == 0 || !is_strong(d)) {
    Fail(ErrorCode::kNotStrong, kNoPartitionMessage);
  }
  DeletionProfile profile;
  profile.base_value = strong_in_domatic_number(d).value;
  for (const Arc& a : d.arcs()) {
    DeletionRecord record{a, false, std::nullopt};
    Digraph smaller = remove_arc(d, a);
    if (is_strong(smaller)) {
      record.still_strong = true;
      record.value_after = strong_in_domatic_number(smaller).value;
    }
    profile.records.push_back(record);
  }
  return profile;
}

bool is_strong_in_domatic_critical(const DeletionProfile& profile) {
  for (const DeletionRecord& r : profile.records) {
    if (!r.still_strong || *r.value_after != profile.base_value - 1) {
      return false;
    }
  }
  return true;
}

bool is_strong_in_domatic_critical(const Digraph& d) {
  return is_strong_in_domatic_critical(deletion_profile(d));
}

ConditionCheck check_critical_conditions(const Digraph& d,
                                         const VertexPartition& p) {
  if (p.order() != d.order()) {
    Fail(ErrorCode::kInvalidArgument, "partition order differs from digraph");
  }
  ConditionCheck check{p, true, true, {}};
  std::ostringstream why;
  const auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size() && check.holds(); ++i) {
    Subdigraph inside = induced_subdigraph(d, blocks[i]);
    for (const Arc& a : inside.graph.arcs()) {
      if (is_strong(remove_arc(inside.graph, a))) {
        check.b1 = false;
        why << "b.1 fails: block " << i << " stays strong without arc ("
            << inside.origin[a.tail] << "," << inside.origin[a.head] << ")";
        break;
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size() && check.holds(); ++i) {
    for (Vertex u = 0; u < d.order(); ++u) {
      if (p.block_of(u) == static_cast<int>(i)) continue;
      int hits = 0;
      for (Vertex w : d.out_neighbors(u)) {
        if (p.block_of(w) == static_cast<int>(i)) ++hits;
      }
      if (hits != 1) {
        check.b2 = false;
        why << "b.2 fails: vertex " << u << " has " << hits
            << " out-neighbors in block " << i;
        break;
      }
    }
  }
  check.detail = why.str();
  return check;
}

CharacterizationResult characterization_holds(const Digraph& d) {
  CharacterizationResult result;
  if (d.order() == 0 || !is_strong(d)) {
    result.reason = "digraph is not strong";
    return result;
  }
  for (const Arc& a : d.arcs()) {
    if (!is_strong(remove_arc(d, a))) {
      std::ostringstream msg;
      msg << "deleting arc (" << a.tail << "," << a.head
          << ") destroys strongness";
      result.reason = msg.str();
      return result;
    }
  }
  if (strong_in_domatic_number(d).value < 2) {
    result.reason = "d_s- < 2";
    return result;
  }
  result.status = CharacterizationStatus::kHolds;
  for (const VertexPartition& p : enumerate_max_partitions(d)) {
    ConditionCheck check = check_critical_conditions(d, p);
    if (!check.holds() &&
        result.status == CharacterizationStatus::kHolds) {
      result.status = CharacterizationStatus::kFails;
      result.reason = check.detail;
    }
    result.partitions.push_back(std::move(check));
  }
  return result;
}

const char* to_string(CharacterizationStatus status) {
  switch (status) {
    case CharacterizationStatus::kHolds:
      return "holds";
    case CharacterizationStatus::kFails:
      return "fails";
    case CharacterizationStatus::kNotApplicable:
      return "not-applicable";
  }
  return "?";
}

}  // namespace sidom
