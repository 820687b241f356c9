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

#ifndef SIDOM_FAMILIES_HPP_
#define SIDOM_FAMILIES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "sidom/digraph.hpp"
#include "sidom/domination.hpp"

namespace sidom {

Digraph complete_digraph(int n);
// n >= 2; the cycle of order 2 is the symmetric pair {(0,1), (1,0)}.
Digraph directed_cycle(int n);
Digraph empty_digraph(int n);

// A generated digraph together with what is known about it in closed form.
struct FamilyInstance {
  std::string family;
  Digraph digraph;
  std::optional<VertexPartition> canonical_partition;
  std::optional<int> claimed_value;  // nullopt: digraph is not strong
  // nullopt: the construction makes no criticality claim.
  std::optional<bool> claimed_critical;
};

// Order 2n, vertices u_1..u_n = 0..n-1 and v_1..v_n = n..2n-1, with
//   (u_i,u_j), (v_i,v_j) arcs iff i < j;  (v_i,u_j), (u_i,v_j) arcs iff i >= j.
// d_s⁻ = n with unique maximum partition {{u_i, v_i}}; critical. n >= 3.
FamilyInstance pair_critical_family(int n);

// Order p with d_s⁻ = m, for p >= 3 and 0 < m <= p/2: write p = mq + r with
// 0 <= r < m, blow the cycle of order q up into empty parts of orders
// m, ..., m, m + r (the last part takes the remainder).
FamilyInstance order_value_family(int p, int m);

// Critical digraph of order p with d_s⁻ = n, for p, n >= 2 and n | p: the
// complete digraph when p == n, otherwise the cycle of order p/n blown up
// into empty parts of order n.
FamilyInstance critical_composition_family(int p, int n);

// Dispatch by family name: "complete", "cycle", "empty" (a = n),
// "pair-critical" (a = n), "order-value" (a = p, b = m),
// "critical-composition" (a = p, b = n).
FamilyInstance make_family(std::string_view family, int a, int b = 0);

// Calls `visit` on every labeled digraph of order n (2^(n(n-1)) of them), in
// increasing order of the arc-subset code. n <= 5.
void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit);

// Uniformly chosen arc density in [0.25, 0.75], resampled until strong.
Digraph random_strong_digraph(int order, std::mt19937_64& rng);

}  // namespace sidom

#endif  // SIDOM_FAMILIES_HPP_
