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

#include "sidom/bounds.hpp"

#include "sidom/domination.hpp"
#include "sidom/error.hpp"
#include "sidom/ugraph.hpp"

namespace sidom {

BoundTerm upper_bound_term(const Digraph& d) {
  if (d.order() == 0 || !is_strong(d)) {
    Fail(ErrorCode::kNotStrong, kNoPartitionMessage);
  }
  const int min_out = min_out_degree(d);
  BoundTerm best{min_out + 1, "min out-degree + 1"};
  auto consider = [&best](int value, const char* source) {
    if (value < best.value) best = {value, source};
  };
  if (in_dominating_vertices(d).empty()) {
    consider(min_out, "min out-degree (no in-dominating vertex)");
  }
  if (d.order() >= 2) {
    UGraph g = underlying_graph(d);
    if (!is_semicomplete(d)) {
      consider(vertex_connectivity(g), "vertex connectivity of UG");
    }
    if (best.value > 4 && is_planar(g)) consider(4, "planar");
  }
  return best;
}

int upper_bound(const Digraph& d) { return upper_bound_term(d).value; }

}  // namespace sidom
