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

#ifndef SIDOM_BOUNDS_HPP_
#define SIDOM_BOUNDS_HPP_

#include <string>

#include "sidom/digraph.hpp"

namespace sidom {

struct BoundTerm {
  int value = 0;
  std::string source;
};

// Admissible upper bound on d_s⁻(D) for strong D: the minimum of
//   δ⁺(D) + 1                       always,
//   δ⁺(D)                           when D has no in-dominating vertex,
//   κ(UG(D))                        when D is not semicomplete,
//   4                               when D is planar.
int upper_bound(const Digraph& d);
// The same bound with the clause that produced it.
BoundTerm upper_bound_term(const Digraph& d);

}  // namespace sidom

#endif  // SIDOM_BOUNDS_HPP_
