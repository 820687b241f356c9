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

#ifndef SIDOM_CRITICAL_HPP_
#define SIDOM_CRITICAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sidom/digraph.hpp"
#include "sidom/domination.hpp"

namespace sidom {

struct DeletionRecord {
  Arc arc;
  bool still_strong = false;
  std::optional<int> value_after;  // d_s⁻(D - arc), present iff still_strong
};

struct DeletionProfile {
  int base_value = 0;  // d_s⁻(D)
  std::vector<DeletionRecord> records;  // in arc order
};

// D must be strong.
DeletionProfile deletion_profile(const Digraph& d);

// Every D - a is strong with d_s⁻(D - a) = d_s⁻(D) - 1. A digraph with some
// strongness-destroying deletion is reported as not critical.
bool is_strong_in_domatic_critical(const Digraph& d);
bool is_strong_in_domatic_critical(const DeletionProfile& profile);

// Conditions on one d_s⁻-partition:
//   b.1  no arc deletion inside a block keeps the block strong,
//   b.2  every vertex outside a block has exactly one out-neighbor in it.
struct ConditionCheck {
  VertexPartition partition;
  bool b1 = true;
  bool b2 = true;
  std::string detail;  // first violation, empty when both hold
  bool holds() const { return b1 && b2; }
};

ConditionCheck check_critical_conditions(const Digraph& d,
                                         const VertexPartition& p);

enum class CharacterizationStatus { kHolds, kFails, kNotApplicable };

struct CharacterizationResult {
  CharacterizationStatus status = CharacterizationStatus::kNotApplicable;
  std::string reason;  // why not applicable, or the first failing partition
  std::vector<ConditionCheck> partitions;
};

// Evaluates b.1 and b.2 over every maximum strong in-domatic partition.
// Requires D strong, d_s⁻(D) >= 2 and D - a strong for every arc a;
// otherwise the status is kNotApplicable.
CharacterizationResult characterization_holds(const Digraph& d);

const char* to_string(CharacterizationStatus status);

}  // namespace sidom

#endif  // SIDOM_CRITICAL_HPP_
