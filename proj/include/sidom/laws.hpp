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

#ifndef SIDOM_LAWS_HPP_
#define SIDOM_LAWS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidom/digraph.hpp"

namespace sidom {

enum class LawStatus { kHolds, kViolated, kNotApplicable };

const char* to_string(LawStatus status);

struct LawEntry {
  std::string id;        // "L1" .. "L16"
  std::string title;
  std::string citation;  // the statement being tested
  LawStatus status = LawStatus::kNotApplicable;
  std::vector<std::pair<std::string, long>> values;  // computed quantities
  std::string details;  // witness description or not-applicable reason
  std::string note;     // interpretation remarks and side observations
};

struct LawReport {
  Digraph digraph;  // reproduces any violation
  std::vector<LawEntry> entries;

  int count(LawStatus status) const;
  int violations() const { return count(LawStatus::kViolated); }
  const LawEntry* find(const std::string& id) const;
  std::string to_text() const;
  std::string to_json() const;
};

struct LawOptions {
  int samples = 20;            // spanning subdigraphs drawn for L7
  std::uint64_t seed = 1;
  std::optional<Digraph> second_factor;  // L12; K2 when absent
  int max_order = 8;           // solver-backed laws on D
  int max_arcs = 12;           // laws that solve on arc-indexed digraphs
  int max_derived_order = 20;  // products, compositions, S/R/Q/T
};

// Evaluates L1..L16 on D in fixed order. A non-strong D gets a single L1
// entry.
LawReport check_all(const Digraph& d, const LawOptions& options = {});

}  // namespace sidom

#endif  // SIDOM_LAWS_HPP_
