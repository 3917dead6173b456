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

#include "netkat/unfold.h"

#include <vector>

#include "netkat/error.h"
#include "netkat/rewrite.h"

namespace netkat {

Policy BuildProgram(const SafetyProblem& problem, std::size_t n) {
  Policy step = Policy::Union(
      Policy::One(), Policy::Seq(problem.switch_policy, problem.topology));
  return Policy::Seq(
      Policy::Filter(problem.ingress),
      Policy::Seq(Policy::Rep(step, n), Policy::Filter(problem.egress)));
}

Policy Unfold(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
    case Policy::Kind::kMod:
      return p;
    case Policy::Kind::kUnion: {
      std::vector<Policy> ops;
      for (const Policy& op : p.operands()) ops.push_back(Unfold(op));
      return Policy::Union(std::move(ops));
    }
    case Policy::Kind::kSeq:
      return Policy::Seq(Unfold(p.operands()[0]), Unfold(p.operands()[1]));
    case Policy::Kind::kRep: {
      if (p.count() == 0) return Policy::One();
      Policy body = Unfold(p.operands()[0]);
      Policy out = body;
      for (std::size_t k = 1; k < p.count(); ++k) out = Policy::Seq(out, body);
      return out;
    }
  }
  return p;
}

std::size_t DefaultUnfoldBound(const Policy& topology) {
  if (ContainsNegation(topology) || ContainsRepetition(topology)) {
    throw Error(ErrorCode::kMalformedTopology,
                "topology must be a sum of link summands without negation or "
                "repetition");
  }
  std::size_t links = 0;
  for (const Path& path : ToUnionFreeSum(topology)) {
    std::size_t i = 0;
    const auto& t = path.tokens;
    while (i < t.size() && t[i].is_test()) ++i;
    const std::size_t tests = i;
    while (i < t.size() && t[i].is_mod()) ++i;
    if (tests == 0 || i != t.size()) {
      throw Error(ErrorCode::kMalformedTopology,
                  "topology summand '" + path.ToString() +
                      "' is not of the form tests . modifications");
    }
    ++links;
  }
  return links;
}

}  // namespace netkat
