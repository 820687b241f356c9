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

#ifndef SIDOM_ORACLE_HPP_
#define SIDOM_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidom/digraph.hpp"

namespace sidom {

enum class Invariant {
  kStrongInDomatic,   // d_s⁻
  kStrongOutDomatic,  // d_s⁺
  kInDomatic,         // d⁻
  kLambda,            // Λ
};

inline constexpr int kOracleMaxOrder = 6;
inline constexpr int kOracleMaxArcs = 12;

// Enumerates every set partition (restricted growth strings) of V(D), or of
// A(D) for Λ, and keeps the largest one accepted by the domination
// predicates. Shares no code with the backtracking solver. Single-threaded.
// Throws kNotStrong when no partition qualifies.
int brute_force_oracle(const Digraph& d, Invariant which);

struct OracleScanOptions {
  int max_n = 3;                 // exhaustive order, 3 or 4
  std::uint64_t seed = 0;
  int random_count = 0;          // random strong digraphs beyond the scan
  int random_up_to = 6;          // their order is drawn from [max_n+1, up_to]
  int lambda_max_arcs = kOracleMaxArcs;
};

struct OracleScanSummary {
  long scanned = 0;           // labeled digraphs of order max_n
  long strong = 0;
  long random_checked = 0;
  long dsminus_compared = 0;
  long indomatic_compared = 0;
  long lambda_compared = 0;
  long mismatches = 0;
  std::vector<std::string> mismatch_details;
  double seconds = 0;
};

// Solver vs oracle on all labeled digraphs of order max_n plus seeded random
// strong digraphs.
OracleScanSummary run_oracle_scan(const OracleScanOptions& options);

}  // namespace sidom

#endif  // SIDOM_ORACLE_HPP_
