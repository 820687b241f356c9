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

#include "sidom/oracle.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "sidom/domination.hpp"
#include "sidom/error.hpp"
#include "sidom/families.hpp"
#include "sidom/solver.hpp"

namespace sidom {

namespace {

// Calls `visit` with each restricted growth string of length `size` and its
// block count.
void for_each_set_partition(
    std::size_t size,
    const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> rgs(size, 0);
  std::function<void(std::size_t, int)> step = [&](std::size_t i, int blocks) {
    if (i == size) {
      visit(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      step(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (size > 0) {
    step(1, 1);  // element 0 always opens block 0
  }
}

std::string describe(const Digraph& d) {
  std::ostringstream out;
  out << "n=" << d.order() << " arcs=";
  for (const Arc& a : d.arcs()) out << "(" << a.tail << "," << a.head << ")";
  return out.str();
}

}  // namespace

int brute_force_oracle(const Digraph& d, Invariant which) {
  if (d.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty digraph");
  int best = 0;
  if (which == Invariant::kLambda) {
    if (d.arc_count() == 0) Fail(ErrorCode::kInvalidArgument, "no arcs");
    if (d.arc_count() > static_cast<std::size_t>(kOracleMaxArcs)) {
      Fail(ErrorCode::kSizeLimit, "oracle caps Λ at 12 arcs");
    }
    if (!is_strong(d)) Fail(ErrorCode::kNotStrong, "strong covers need a strong digraph");
    for_each_set_partition(d.arc_count(), [&](const std::vector<int>& rgs, int k) {
      if (k > best &&
          is_strong_cover_partition(d, ArcPartition::from_assignment(rgs))) {
        best = k;
      }
    });
  } else {
    if (d.order() > kOracleMaxOrder) {
      Fail(ErrorCode::kSizeLimit, "oracle caps vertex invariants at order 6");
    }
    for_each_set_partition(static_cast<std::size_t>(d.order()),
                           [&](const std::vector<int>& rgs, int k) {
      if (k <= best) return;
      auto p = VertexPartition::from_assignment(rgs);
      bool ok = false;
      switch (which) {
        case Invariant::kStrongInDomatic:
          ok = is_strong_in_domatic_partition(d, p);
          break;
        case Invariant::kStrongOutDomatic:
          ok = is_strong_out_domatic_partition(d, p);
          break;
        case Invariant::kInDomatic:
          ok = is_in_domatic_partition(d, p);
          break;
        case Invariant::kLambda:
          break;
      }
      if (ok) best = k;
    });
  }
  if (best == 0) Fail(ErrorCode::kNotStrong, kNoPartitionMessage);
  return best;
}

OracleScanSummary run_oracle_scan(const OracleScanOptions& options) {
  if (options.max_n < 1 || options.max_n > 4) {
    Fail(ErrorCode::kSizeLimit, "--max-n must be between 1 and 4");
  }
  if (options.random_count > 0 &&
      (options.random_up_to > kOracleMaxOrder || options.random_up_to < 2)) {
    Fail(ErrorCode::kSizeLimit, "random instances are capped at order 6");
  }
  const auto start = std::chrono::steady_clock::now();
  OracleScanSummary summary;

  auto compare = [&](const Digraph& d) {
    auto mismatch = [&](const char* what, int solver, int oracle) {
      ++summary.mismatches;
      std::ostringstream msg;
      msg << what << " solver=" << solver << " oracle=" << oracle << " on "
          << describe(d);
      summary.mismatch_details.push_back(msg.str());
    };
    const int ds = strong_in_domatic_number(d).value;
    const int ds_oracle = brute_force_oracle(d, Invariant::kStrongInDomatic);
    ++summary.dsminus_compared;
    if (ds != ds_oracle) mismatch("d_s-", ds, ds_oracle);

    const int in = in_domatic_number(d).value;
    const int in_oracle = brute_force_oracle(d, Invariant::kInDomatic);
    ++summary.indomatic_compared;
    if (in != in_oracle) mismatch("d-", in, in_oracle);

    if (d.arc_count() >= 1 &&
        d.arc_count() <= static_cast<std::size_t>(options.lambda_max_arcs)) {
      const int lam = lambda_number(d).value;
      const int lam_oracle = brute_force_oracle(d, Invariant::kLambda);
      ++summary.lambda_compared;
      if (lam != lam_oracle) mismatch("lambda", lam, lam_oracle);
    }
  };

  for_each_digraph(options.max_n, [&](const Digraph& d) {
    ++summary.scanned;
    if (!is_strong(d)) return;
    ++summary.strong;
    compare(d);
  });

  if (options.random_count > 0) {
    std::mt19937_64 rng(options.seed);
    const int low = std::min(options.max_n + 1, options.random_up_to);
    std::uniform_int_distribution<int> order(low, options.random_up_to);
    for (int i = 0; i < options.random_count; ++i) {
      compare(random_strong_digraph(order(rng), rng));
      ++summary.random_checked;
    }
  }
  summary.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return summary;
}

}  // namespace sidom
