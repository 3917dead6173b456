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
// File: rewrite.h
// -----------------------------------------------------------------------------
//
// Normalization of policies to a canonical sum of paths under the equational
// system without PA-MOD-MOD and PA-FILTER-MOD. Consecutive modifications are
// never merged, so every canonical path keeps the full hop trace.
//
// Path rules, where `M` is a token sequence that does not modify `f`:
//
//   DropOne       1 . x  ->  x                 (path keeps >= 1 token)
//   ZeroToken     ... 0 ...  ->  0
//   TestContra    f=v . N . f=w  ->  0          (v != w, N has no f<-w)
//   ModContra     f<-v . M . f=w  ->  0         (v != w)
//   DuplicateTest f=v . M . f=v  ->  f=v . M
//   ModFilter     f<-v . M . f=v  ->  f<-v . M
//   Swap          x . y  ->  y . x              (both tests or both mods,
//                                                different fields, y < x)
//
// Every rule strictly decreases (token count, field-order inversions)
// lexicographically. The system is confluent; its normal form is:
//   * 0 when some test contradicts the symbolic state before it,
//   * otherwise the path without redundant tests and `1`s, with each maximal
//     run of tests (resp. mods) stably sorted by field rank.
// The identity path is the singleton `[1]`.

#ifndef NETKAT_REWRITE_H_
#define NETKAT_REWRITE_H_

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "netkat/terms.h"

namespace netkat {

// Total order on fields: explicitly ranked fields first, in list order, then
// every other field by name. The default order is lexicographic.
class FieldOrder {
 public:
  FieldOrder() = default;
  static FieldOrder Lexicographic() { return FieldOrder(); }
  // Throws `Error(kInvalidArgument)` on a repeated field.
  static FieldOrder FromList(std::span<const FieldId> fields);

  bool Less(FieldId a, FieldId b) const;

 private:
  std::map<FieldId, std::size_t> rank_;
};

// What is known about one field at a point along a path.
struct FieldState {
  enum class Kind : std::uint8_t { kUnknown, kKnown, kInitiallyTested };
  Kind kind = Kind::kUnknown;
  Value value;

  friend bool operator==(const FieldState&, const FieldState&) = default;
};

// Per-field symbolic state. `Known(v)` after a modification `f<-v`;
// `InitiallyTested(v)` after a test `f=v` with no earlier modification of f.
class SymbolicState {
 public:
  FieldState Get(FieldId f) const;
  void Set(FieldId f, FieldState s);

  // Outcome of running test `f=v` in this state.
  enum class TestOutcome : std::uint8_t { kFails, kRedundant, kNarrows };
  TestOutcome Classify(FieldId f, Value v) const;

  friend bool operator==(const SymbolicState&, const SymbolicState&) = default;

 private:
  // Sorted by field index.
  std::vector<std::pair<std::uint32_t, FieldState>> entries_;
};

enum class Rule : std::uint8_t {
  kDropOne,
  kZeroToken,
  kTestContra,
  kModContra,
  kDuplicateTest,
  kModFilter,
  kSwap,
};
std::string_view RuleName(Rule r);

// Termination measure, compared lexicographically. The zero path has
// measure (0, 0).
struct Measure {
  std::size_t tokens = 0;
  std::size_t inversions = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};
Measure MeasureOf(std::span<const Token> tokens, const FieldOrder& order);

// One applied rewrite, reported to observers.
struct RewriteStep {
  Rule rule;
  Measure before;
  Measure after;
};
using RewriteObserver = std::function<void(const RewriteStep&)>;

// -----------------------------------------------------------------------------
// Generic rule engine.

// A rule instance. Positions index into the path: `first` is the left token of
// the pattern and `second` the token that is removed (or swapped).
struct Redex {
  Rule rule;
  std::size_t first;
  std::size_t second;
  friend bool operator==(const Redex&, const Redex&) = default;
};

// Every redex of `path`, in a deterministic order. O(n^2).
std::vector<Redex> FindRedexes(std::span<const Token> path,
                               const FieldOrder& order);

// Applies one redex; `std::nullopt` when the path becomes 0.
std::optional<Path> ApplyRedex(const Path& path, const Redex& redex);

// Picks the index of the redex to apply next; never called with an empty span.
using Schedule = std::function<std::size_t(std::span<const Redex>)>;

// Rewrites to a normal form, choosing redexes with `schedule`.
std::optional<Path> ReduceWithSchedule(const Path& path,
                                       const FieldOrder& order,
                                       const Schedule& schedule,
                                       const RewriteObserver& observer = {});

// -----------------------------------------------------------------------------
// Incremental reduction.

// A canonical path prefix plus its symbolic state. Appending a token and
// re-normalizing costs O(length of the trailing run).
class PathBuilder {
 public:
  explicit PathBuilder(const FieldOrder& order) : order_(&order) {}

  // Appends `token` and restores the normal form. Returns false once the path
  // is 0; a zero builder ignores further tokens.
  bool Append(const Token& token, const RewriteObserver& observer = {});

  bool zero() const { return zero_; }
  // Canonical tokens so far; empty for the identity.
  const std::vector<Token>& tokens() const { return tokens_; }
  const SymbolicState& state() const { return state_; }
  // The canonical path; `[1]` for the identity. Requires !zero().
  Path ToPath() const;

  friend bool operator==(const PathBuilder& a, const PathBuilder& b) {
    return a.tokens_ == b.tokens_;
  }
  friend auto operator<=>(const PathBuilder& a, const PathBuilder& b) {
    return a.tokens_ <=> b.tokens_;
  }

 private:
  void Report(const RewriteObserver& observer, Rule rule,
              std::span<const Token> before,
              std::span<const Token> after) const;

  const FieldOrder* order_;
  std::vector<Token> tokens_;
  SymbolicState state_;
  bool zero_ = false;
};

// Canonical form of one negation-free path; `std::nullopt` iff it reduces to 0.
std::optional<Path> ReducePath(const Path& path, const FieldOrder& order = {},
                               const RewriteObserver& observer = {});

// Exact emptiness of a negation-free path, by forward symbolic execution.
bool SymbolicZeroCheck(const Path& path);

// -----------------------------------------------------------------------------
// Whole-policy normalization.

// Negation-free policy equivalent to `p`. Throws `Error(kUndeclaredField)`
// when a negated test's field has no domain.
Policy EliminateNegation(const Policy& p, const DomainMap& domains);
Predicate EliminateNegation(const Predicate& a, const DomainMap& domains);

// Literal distribution into union-free products. `1` tokens are dropped and
// products containing `0` are omitted; the empty product is `[1]`. Rep nodes
// are unrolled. Throws `Error(kInvalidArgument)` on negation.
SumOfPaths ToUnionFreeSum(const Policy& p);

// Number of products of the literal distribution of `p`, before any
// simplification; saturates at UINT64_MAX.
std::uint64_t RawSummandCount(const Policy& p);

struct NormalizeOptions {
  FieldOrder order;
  // Throws `Error(kTimeout)` once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // 0 means `WorkerCount()`.
  std::size_t workers = 0;
  // Sees every rule application; called concurrently when workers > 1.
  RewriteObserver observer;
};

struct NormalizeStats {
  // Products of the literal distribution (saturating).
  std::uint64_t summands_before_reduction = 0;
  // Partial products that reduced to 0.
  std::uint64_t zero_paths = 0;
  // Partial products merged with an equal canonical product.
  std::uint64_t dedup_count = 0;
};

// Canonical sum of paths of `p`; empty iff `p` reduces to 0. Reduces
// incrementally while distributing, which by confluence equals reducing
// every summand of the literal distribution.
SumOfPaths Normalize(const Policy& p, const DomainMap& domains,
                     const NormalizeOptions& options = {},
                     NormalizeStats* stats = nullptr);

// The literal route: distribute fully, then reduce each product. Only
// feasible for small inputs; used to cross-check `Normalize`.
SumOfPaths NormalizeByDistribution(const Policy& p, const DomainMap& domains,
                                   const FieldOrder& order = {});

}  // namespace netkat

#endif  // NETKAT_REWRITE_H_
