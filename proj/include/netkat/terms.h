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
// File: terms.h
// -----------------------------------------------------------------------------
//
// Core term language of the dup-free, star-free NetKAT fragment: interned
// fields, values, finite field domains, the predicate and policy ASTs, and the
// token/path/sum-of-paths representation that normalization produces.
//
// Predicates and policies are immutable, reference-counted trees. The smart
// constructors keep them in a canonical shape so that structural equality is
// equality modulo associativity, commutativity and idempotence of `+`:
//
//   * `+` is stored flattened as a sorted, duplicate-free operand set.
//   * At the policy level, all filter operands of a union are merged into one
//     filter over the disjunction of their predicates, and `a . b` of two
//     filters is the filter of the conjunction `a . b`. This identifies the
//     predicate-level and policy-level readings of `+` and `.`, so printing
//     and re-parsing a policy always yields a structurally equal policy.
//
// Sequential composition is never reassociated or commuted.

#ifndef NETKAT_TERMS_H_
#define NETKAT_TERMS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netkat {

// An interned packet-header field name such as `pt`, `sw` or `dst`. Equality
// is identity of the interned record; ordering is by name, so any container
// keyed on fields iterates in the same order on every run.
class FieldId {
 public:
  // The unnamed placeholder field (empty name); used by tokens that carry no
  // field.
  FieldId();
  // Interns `name`. Throws `Error(kInvalidArgument)` if it is empty.
  explicit FieldId(std::string_view name);

  std::string_view name() const;
  // Dense index assigned at interning time; stable for the process lifetime.
  std::uint32_t index() const;

  friend bool operator==(FieldId a, FieldId b) { return a.rec_ == b.rec_; }
  friend std::strong_ordering operator<=>(FieldId a, FieldId b);

  // Interning record; opaque outside terms.cc.
  struct Record;

 private:
  const Record* rec_;
};

// A field value: a natural number, or a symbolic label (`A`, `SSH`, `H2`).
// Symbols are interned globally and encoded as negative integers, so all
// values compare and hash as a single int64.
class Value {
 public:
  constexpr Value() = default;

  // `n` must be non-negative.
  static Value Number(std::int64_t n);
  // Interns `name`, which must be a non-empty identifier.
  static Value Symbol(std::string_view name);

  bool is_symbol() const { return raw_ < 0; }
  std::int64_t number() const { return raw_; }
  std::string symbol() const;
  std::int64_t raw() const { return raw_; }

  std::string ToString() const;

  friend bool operator==(Value, Value) = default;
  friend std::strong_ordering operator<=>(Value, Value) = default;

 private:
  constexpr explicit Value(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

// Declared finite value domain of every field. Domains are non-empty and keep
// their declaration order.
class DomainMap {
 public:
  // Throws `Error(kInvalidArgument)` on an empty domain, a duplicate value or a
  // field declared twice.
  void Declare(FieldId field, std::vector<Value> values);

  bool Contains(FieldId field) const { return domains_.contains(field); }
  // Throws `Error(kUndeclaredField)` when `field` has no domain.
  const std::vector<Value>& Values(FieldId field) const;
  bool InDomain(FieldId field, Value value) const;
  // Position of `value` inside the domain of `field`, if present.
  std::optional<std::size_t> IndexOf(FieldId field, Value value) const;

  // Declared fields in name order.
  std::vector<FieldId> Fields() const;
  std::size_t size() const { return domains_.size(); }
  bool empty() const { return domains_.empty(); }

  // Product of all domain sizes, saturating at UINT64_MAX.
  std::uint64_t PacketSpaceSize() const;

  friend bool operator==(const DomainMap&, const DomainMap&) = default;

 private:
  std::map<FieldId, std::vector<Value>> domains_;
};

class Predicate {
 public:
  enum class Kind : std::uint8_t { kOne, kZero, kTest, kOr, kAnd, kNot };

  static Predicate One();
  static Predicate Zero();
  static Predicate Test(FieldId field, Value value);
  // Disjunction, flattened into a sorted duplicate-free operand set. A single
  // distinct operand is returned as is; an empty set is `Zero()`.
  static Predicate Or(Predicate a, Predicate b);
  static Predicate Or(std::vector<Predicate> operands);
  // Conjunction; binary and order preserving.
  static Predicate And(Predicate a, Predicate b);
  static Predicate Not(Predicate a);

  Kind kind() const;
  // Only meaningful for `kTest`.
  FieldId field() const;
  Value value() const;
  // kOr: the operand set. kAnd: {lhs, rhs}. kNot: {operand}. Otherwise empty.
  std::span<const Predicate> operands() const;

  friend bool operator==(const Predicate& a, const Predicate& b);
  friend std::strong_ordering operator<=>(const Predicate& a,
                                          const Predicate& b);

 private:
  struct Node;
  explicit Predicate(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Policy {
 public:
  enum class Kind : std::uint8_t { kFilter, kMod, kUnion, kSeq, kRep };

  static Policy Filter(Predicate a);
  static Policy Mod(FieldId field, Value value);
  // Union, flattened into a sorted duplicate-free operand set with all filter
  // operands merged into one. A single distinct operand is returned as is; an
  // empty set is `Filter(Zero)`.
  static Policy Union(Policy p, Policy q);
  static Policy Union(std::vector<Policy> operands);
  // Sequential composition. `Filter(a) . Filter(b)` becomes
  // `Filter(And(a, b))`; everything else stays a binary node.
  static Policy Seq(Policy p, Policy q);
  // Bounded repetition p^n; `Rep(p, 0)` denotes the identity.
  static Policy Rep(Policy p, std::size_t n);

  // Convenience constructors.
  static Policy One() { return Filter(Predicate::One()); }
  static Policy Zero() { return Filter(Predicate::Zero()); }
  static Policy Test(FieldId f, Value v) {
    return Filter(Predicate::Test(f, v));
  }

  Kind kind() const;
  // kFilter only.
  const Predicate& predicate() const;
  // kMod only.
  FieldId field() const;
  Value value() const;
  // kRep only.
  std::size_t count() const;
  // kUnion: the operand set. kSeq: {lhs, rhs}. kRep: {body}. Otherwise empty.
  std::span<const Policy> operands() const;

  friend bool operator==(const Policy& a, const Policy& b);
  friend std::strong_ordering operator<=>(const Policy& a, const Policy& b);

 private:
  struct Node;
  explicit Policy(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Token {
  enum class Kind : std::uint8_t { kOne, kZero, kTest, kMod };

  Kind kind = Kind::kOne;
  // Unused for kOne / kZero.
  FieldId field;
  Value value;

  static Token One() { return Token{}; }
  static Token Zero() { return Token{Kind::kZero, FieldId(), Value()}; }
  static Token Test(FieldId f, Value v) { return Token{Kind::kTest, f, v}; }
  static Token Mod(FieldId f, Value v) { return Token{Kind::kMod, f, v}; }

  bool is_test() const { return kind == Kind::kTest; }
  bool is_mod() const { return kind == Kind::kMod; }

  // `pt=1`, `pt<-5`, `1`, `0`.
  std::string ToString() const;

  friend bool operator==(const Token& a, const Token& b);
  friend std::strong_ordering operator<=>(const Token& a, const Token& b);
};

// One union-free summand: a product of tokens.
struct Path {
  std::vector<Token> tokens;

  // Tokens joined by ` . `; the empty product prints as `1`.
  std::string ToString() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    return a.tokens <=> b.tokens;
  }
};

// A duplicate-free sum of paths; the empty set is the policy 0.
using SumOfPaths = std::set<Path>;

// Left-associated sequential composition of the path's tokens; the empty
// token list maps to `Filter(One)`.
Policy PolicyOfPath(const Path& path);

// Sum of `PolicyOfPath` over every path; the empty sum is `Filter(Zero)`.
Policy PolicyOfSum(const SumOfPaths& sum);

// Equality modulo associativity, commutativity and idempotence of `+`.
bool StructuralEq(const Policy& p, const Policy& q);

// Number of AST nodes of the equivalent binary tree: a k-ary union or
// disjunction counts k - 1 binary nodes, `Filter` counts 1 on top of its
// predicate, and `Rep(p, n)` counts 1 + size(p).
std::size_t PolicySize(const Policy& p);
std::size_t PredicateSize(const Predicate& a);

// Concrete syntax accepted by the parser; precedence `~` > `.` > `+`.
std::string ToString(const Predicate& a);
std::string ToString(const Policy& p);

// True iff the policy mentions a negation / a repetition anywhere.
bool ContainsNegation(const Policy& p);
bool ContainsRepetition(const Policy& p);

// Every (field, value) mentioned by a test or modification.
void CollectFieldValues(const Policy& p,
                        std::set<std::pair<FieldId, Value>>& out);
void CollectFieldValues(const Predicate& a,
                        std::set<std::pair<FieldId, Value>>& out);

// -----------------------------------------------------------------------------
// Node layouts. Defined here so that operand spans can be handed out inline.

struct Predicate::Node {
  Kind kind;
  FieldId field;
  Value value;
  std::vector<Predicate> children;
};

struct Policy::Node {
  Kind kind;
  FieldId field;
  Value value;
  std::size_t count = 0;
  std::optional<Predicate> predicate;
  std::vector<Policy> children;
};

inline Predicate::Kind Predicate::kind() const { return node_->kind; }
inline FieldId Predicate::field() const { return node_->field; }
inline Value Predicate::value() const { return node_->value; }
inline std::span<const Predicate> Predicate::operands() const {
  return node_->children;
}

inline Policy::Kind Policy::kind() const { return node_->kind; }
inline const Predicate& Policy::predicate() const { return *node_->predicate; }
inline FieldId Policy::field() const { return node_->field; }
inline Value Policy::value() const { return node_->value; }
inline std::size_t Policy::count() const { return node_->count; }
inline std::span<const Policy> Policy::operands() const {
  return node_->children;
}

}  // namespace netkat

#endif  // NETKAT_TERMS_H_
