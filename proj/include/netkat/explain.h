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
//
// -----------------------------------------------------------------------------
// File: explain.h
// -----------------------------------------------------------------------------
//
// Safety verdicts and minimal failure explanations. A problem is safe at
// bound n when in . (1 + p . t)^n . out normalizes to the empty sum; otherwise
// every canonical path of that sum is a failure explanation, and the minimal
// ones are those not strictly subsumed (as token subsequences) by another.

#ifndef NETKAT_EXPLAIN_H_
#define NETKAT_EXPLAIN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "netkat/parser.h"
#include "netkat/rewrite.h"
#include "netkat/terms.h"

namespace netkat {

// p ⊑ q: p's tokens form a (not necessarily contiguous) subsequence of q's.
// `1` tokens count as the empty sequence.
bool Subsumes(const Path& p, const Path& q);
// p ⊏ q: p ⊑ q and p != q.
bool StrictlySubsumes(const Path& p, const Path& q);

// Removes every path strictly subsumed by another path of `s`.
SumOfPaths Minimize(const SumOfPaths& s);

enum class Verdict { kSafe, kUnsafe };
std::string_view VerdictName(Verdict v);

struct ExplanationStats {
  std::uint64_t summands_before_reduction = 0;
  std::uint64_t zero_paths = 0;
  std::uint64_t dedup_count = 0;
  // Canonical paths before minimization.
  std::uint64_t canonical_paths = 0;
  double elapsed_seconds = 0.0;
};

// Invariant: verdict == kSafe iff paths is empty.
struct Explanation {
  Verdict verdict = Verdict::kSafe;
  SumOfPaths paths;
  std::size_t unfold_n = 0;
  ExplanationStats stats;
};

struct ExplainOptions {
  // Overrides the problem's bound, which overrides the topology link count.
  std::optional<std::size_t> unfold_n;
  bool minimize = true;
  NormalizeOptions normalize;
};

// The bound `Explain` uses for `problem` under `options`.
std::size_t ResolveUnfoldBound(const SafetyProblem& problem,
                               const ExplainOptions& options = {});

Explanation Explain(const SafetyProblem& problem,
                    const ExplainOptions& options = {});

// {"verdict": "safe"|"unsafe", "unfold_n": n, "paths": [[token...]...],
//  "stats": {...}} where a token is {"op": "test"|"mod"|"one"|"zero",
// "field": name, "value": number or symbol name}.
std::string ExplanationToJson(const Explanation& e, bool include_stats = true);
// Throws `Error(kParseError)` on malformed input.
Explanation ExplanationFromJson(std::string_view json);

// Verdict line followed by one explanation per line (`pt=1 . pt<-5`).
std::string ExplanationToText(const Explanation& e, bool include_stats = false);

}  // namespace netkat

#endif  // NETKAT_EXPLAIN_H_
