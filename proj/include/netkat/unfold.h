// Copyright 2026 The NetKAT SafeCheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETKAT_UNFOLD_H_
#define NETKAT_UNFOLD_H_

#include <cstddef>

#include "netkat/parser.h"
#include "netkat/terms.h"

namespace netkat {

// in . (1 + p . t)^n . out
Policy BuildProgram(const SafetyProblem& problem, std::size_t n);

// Replaces every Rep(q, m) by the m-fold sequential composition of q,
// innermost first; Rep(q, 0) becomes 1. The result has no Rep nodes.
Policy Unfold(const Policy& p);

// Number of forwarding links of a topology given as a sum of link-shaped
// summands: each distributed summand must be a non-empty run of tests
// followed by modifications. Internal links (with mods) and perimeter
// filters (tests only) each count 1. The topology 0 has 0 links.
//
// Throws `Error(kMalformedTopology)` on negation, repetition, or a summand
// that is `1` or not of that shape.
std::size_t DefaultUnfoldBound(const Policy& topology);

}  // namespace netkat

#endif  // NETKAT_UNFOLD_H_
