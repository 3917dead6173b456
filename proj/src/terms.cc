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

#include "netkat/terms.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "netkat/error.h"

namespace netkat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUndeclaredField: return "UndeclaredField";
    case ErrorCode::kValueOutOfDomain: return "ValueOutOfDomain";
    case ErrorCode::kMissingSection: return "MissingSection";
    case ErrorCode::kUnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::kDomainTooLarge: return "DomainTooLarge";
    case ErrorCode::kMalformedTopology: return "MalformedTopology";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Interning.

struct FieldId::Record {
  std::string name;
  std::uint32_t index;
};

namespace {

// Records live in a deque so their addresses never move; FieldId holds a raw
// pointer and reads the name without locking.
struct FieldTable {
  std::shared_mutex mu;
  std::deque<FieldId::Record> records;
  std::unordered_map<std::string_view, const FieldId::Record*> by_name;
};

FieldTable& Fields() {
  static auto* table = new FieldTable;
  return *table;
}

struct SymbolTable {
  std::shared_mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string_view, std::int64_t> codes;
};

SymbolTable& Symbols() {
  static auto* table = new SymbolTable;
  return *table;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

}  // namespace

FieldId::FieldId() {
  static const Record kPlaceholder{"", std::numeric_limits<std::uint32_t>::max()};
  rec_ = &kPlaceholder;
}

FieldId::FieldId(std::string_view name) {
  if (name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "field name must be non-empty");
  }
  FieldTable& table = Fields();
  {
    std::shared_lock lock(table.mu);
    if (auto it = table.by_name.find(name); it != table.by_name.end()) {
      rec_ = it->second;
      return;
    }
  }
  std::unique_lock lock(table.mu);
  if (auto it = table.by_name.find(name); it != table.by_name.end()) {
    rec_ = it->second;
    return;
  }
  auto index = static_cast<std::uint32_t>(table.records.size());
  const Record& rec = table.records.emplace_back(Record{std::string(name), index});
  table.by_name.emplace(rec.name, &rec);
  rec_ = &rec;
}

std::string_view FieldId::name() const { return rec_->name; }
std::uint32_t FieldId::index() const { return rec_->index; }

std::strong_ordering operator<=>(FieldId a, FieldId b) {
  if (a.rec_ == b.rec_) return std::strong_ordering::equal;
  return a.rec_->name.compare(b.rec_->name) < 0 ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
}

Value Value::Number(std::int64_t n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "numeric values must be non-negative, got " + std::to_string(n));
  }
  return Value(n);
}

Value Value::Symbol(std::string_view name) {
  if (!IsIdentifier(name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "symbolic value must be an identifier: '" + std::string(name) +
                    "'");
  }
  SymbolTable& table = Symbols();
  {
    std::shared_lock lock(table.mu);
    if (auto it = table.codes.find(name); it != table.codes.end()) {
      return Value(it->second);
    }
  }
  std::unique_lock lock(table.mu);
  if (auto it = table.codes.find(name); it != table.codes.end()) {
    return Value(it->second);
  }
  const std::string& stored = table.names.emplace_back(name);
  auto code = -static_cast<std::int64_t>(table.names.size());
  table.codes.emplace(stored, code);
  return Value(code);
}

std::string Value::symbol() const {
  if (!is_symbol()) return {};
  SymbolTable& table = Symbols();
  std::shared_lock lock(table.mu);
  return table.names[static_cast<std::size_t>(-raw_ - 1)];
}

std::string Value::ToString() const {
  return is_symbol() ? symbol() : std::to_string(raw_);
}

// ---------------------------------------------------------------------------
// DomainMap.

void DomainMap::Declare(FieldId field, std::vector<Value> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "domain of field '" + std::string(field.name()) +
                    "' must be non-empty");
  }
  if (domains_.contains(field)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field '" + std::string(field.name()) + "' declared twice");
  }
  std::vector<Value> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate value in domain of field '" +
                    std::string(field.name()) + "'");
  }
  domains_.emplace(field, std::move(values));
}

const std::vector<Value>& DomainMap::Values(FieldId field) const {
  auto it = domains_.find(field);
  if (it == domains_.end()) {
    throw Error(ErrorCode::kUndeclaredField,
                "undeclared field '" + std::string(field.name()) + "'");
  }
  return it->second;
}

bool DomainMap::InDomain(FieldId field, Value value) const {
  return IndexOf(field, value).has_value();
}

std::optional<std::size_t> DomainMap::IndexOf(FieldId field,
                                              Value value) const {
  auto it = domains_.find(field);
  if (it == domains_.end()) return std::nullopt;
  auto pos = std::find(it->second.begin(), it->second.end(), value);
  if (pos == it->second.end()) return std::nullopt;
  return static_cast<std::size_t>(pos - it->second.begin());
}

std::vector<FieldId> DomainMap::Fields() const {
  std::vector<FieldId> out;
  out.reserve(domains_.size());
  for (const auto& [field, values] : domains_) out.push_back(field);
  return out;
}

std::uint64_t DomainMap::PacketSpaceSize() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& [field, values] : domains_) {
    if (total > kMax / values.size()) return kMax;
    total *= values.size();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Predicate.

namespace {

template <typename T>
std::strong_ordering CompareSpans(std::span<const T> a, std::span<const T> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

}  // namespace

Predicate Predicate::One() {
  static const Predicate kOne(
      std::make_shared<const Node>(Node{Kind::kOne, FieldId(), Value(), {}}));
  return kOne;
}

Predicate Predicate::Zero() {
  static const Predicate kZero(
      std::make_shared<const Node>(Node{Kind::kZero, FieldId(), Value(), {}}));
  return kZero;
}

Predicate Predicate::Test(FieldId field, Value value) {
  return Predicate(
      std::make_shared<const Node>(Node{Kind::kTest, field, value, {}}));
}

Predicate Predicate::Or(Predicate a, Predicate b) {
  return Or(std::vector<Predicate>{std::move(a), std::move(b)});
}

Predicate Predicate::Or(std::vector<Predicate> operands) {
  std::vector<Predicate> flat;
  for (Predicate& op : operands) {
    if (op.kind() == Kind::kOr) {
      for (const Predicate& inner : op.operands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(op));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return Zero();
  if (flat.size() == 1) return flat.front();
  return Predicate(std::make_shared<const Node>(
      Node{Kind::kOr, FieldId(), Value(), std::move(flat)}));
}

Predicate Predicate::And(Predicate a, Predicate b) {
  return Predicate(std::make_shared<const Node>(
      Node{Kind::kAnd, FieldId(), Value(), {std::move(a), std::move(b)}}));
}

Predicate Predicate::Not(Predicate a) {
  return Predicate(std::make_shared<const Node>(
      Node{Kind::kNot, FieldId(), Value(), {std::move(a)}}));
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Predicate& a, const Predicate& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() == Predicate::Kind::kTest) {
    if (auto c = a.field() <=> b.field(); c != 0) return c;
    return a.value() <=> b.value();
  }
  return CompareSpans(a.operands(), b.operands());
}

// ---------------------------------------------------------------------------
// Policy.

Policy Policy::Filter(Predicate a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFilter;
  node->predicate = std::move(a);
  return Policy(std::move(node));
}

Policy Policy::Mod(FieldId field, Value value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kMod;
  node->field = field;
  node->value = value;
  return Policy(std::move(node));
}

Policy Policy::Union(Policy p, Policy q) {
  return Union(std::vector<Policy>{std::move(p), std::move(q)});
}

Policy Policy::Union(std::vector<Policy> operands) {
  std::vector<Policy> flat;
  std::vector<Predicate> filters;
  auto add = [&](const Policy& op) {
    if (op.kind() == Kind::kFilter) {
      filters.push_back(op.predicate());
    } else {
      flat.push_back(op);
    }
  };
  for (const Policy& op : operands) {
    if (op.kind() == Kind::kUnion) {
      for (const Policy& inner : op.operands()) add(inner);
    } else {
      add(op);
    }
  }
  if (!filters.empty()) flat.push_back(Filter(Predicate::Or(std::move(filters))));
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return Zero();
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnion;
  node->children = std::move(flat);
  return Policy(std::move(node));
}

Policy Policy::Seq(Policy p, Policy q) {
  if (p.kind() == Kind::kFilter && q.kind() == Kind::kFilter) {
    return Filter(Predicate::And(p.predicate(), q.predicate()));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSeq;
  node->children = {std::move(p), std::move(q)};
  return Policy(std::move(node));
}

Policy Policy::Rep(Policy p, std::size_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRep;
  node->count = n;
  node->children = {std::move(p)};
  return Policy(std::move(node));
}

bool operator==(const Policy& a, const Policy& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Policy& a, const Policy& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Policy::Kind::kFilter:
      return a.predicate() <=> b.predicate();
    case Policy::Kind::kMod:
      if (auto c = a.field() <=> b.field(); c != 0) return c;
      return a.value() <=> b.value();
    case Policy::Kind::kRep:
      if (auto c = a.count() <=> b.count(); c != 0) return c;
      break;
    default:
      break;
  }
  return CompareSpans(a.operands(), b.operands());
}

// ---------------------------------------------------------------------------
// Tokens and paths.

bool operator==(const Token& a, const Token& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Token::Kind::kOne || a.kind == Token::Kind::kZero) return true;
  return a.field == b.field && a.value == b.value;
}

std::strong_ordering operator<=>(const Token& a, const Token& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (a.kind == Token::Kind::kOne || a.kind == Token::Kind::kZero) {
    return std::strong_ordering::equal;
  }
  if (auto c = a.field <=> b.field; c != 0) return c;
  return a.value <=> b.value;
}

std::string Token::ToString() const {
  switch (kind) {
    case Kind::kOne: return "1";
    case Kind::kZero: return "0";
    case Kind::kTest:
      return std::string(field.name()) + "=" + value.ToString();
    case Kind::kMod:
      return std::string(field.name()) + "<-" + value.ToString();
  }
  return "?";
}

std::string Path::ToString() const {
  if (tokens.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += " . ";
    out += tokens[i].ToString();
  }
  return out;
}

Policy PolicyOfPath(const Path& path) {
  auto embed = [](const Token& t) {
    switch (t.kind) {
      case Token::Kind::kOne: return Policy::One();
      case Token::Kind::kZero: return Policy::Zero();
      case Token::Kind::kTest: return Policy::Test(t.field, t.value);
      case Token::Kind::kMod: return Policy::Mod(t.field, t.value);
    }
    return Policy::Zero();
  };
  if (path.tokens.empty()) return Policy::One();
  Policy out = embed(path.tokens.front());
  for (std::size_t i = 1; i < path.tokens.size(); ++i) {
    out = Policy::Seq(std::move(out), embed(path.tokens[i]));
  }
  return out;
}

Policy PolicyOfSum(const SumOfPaths& sum) {
  std::vector<Policy> summands;
  summands.reserve(sum.size());
  for (const Path& path : sum) summands.push_back(PolicyOfPath(path));
  return Policy::Union(std::move(summands));
}

bool StructuralEq(const Policy& p, const Policy& q) { return p == q; }

std::size_t PredicateSize(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
    case Predicate::Kind::kZero:
    case Predicate::Kind::kTest:
      return 1;
    case Predicate::Kind::kOr: {
      std::size_t n = a.operands().size() - 1;
      for (const Predicate& op : a.operands()) n += PredicateSize(op);
      return n;
    }
    case Predicate::Kind::kAnd:
    case Predicate::Kind::kNot: {
      std::size_t n = 1;
      for (const Predicate& op : a.operands()) n += PredicateSize(op);
      return n;
    }
  }
  return 0;
}

std::size_t PolicySize(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter: {
      // A bare constant is a single node; anything else is Filter + tree.
      const Predicate& a = p.predicate();
      if (a.kind() == Predicate::Kind::kOne ||
          a.kind() == Predicate::Kind::kZero) {
        return 1;
      }
      return 1 + PredicateSize(a);
    }
    case Policy::Kind::kMod:
      return 1;
    case Policy::Kind::kUnion: {
      std::size_t n = p.operands().size() - 1;
      for (const Policy& op : p.operands()) n += PolicySize(op);
      return n;
    }
    case Policy::Kind::kSeq:
    case Policy::Kind::kRep: {
      std::size_t n = 1;
      for (const Policy& op : p.operands()) n += PolicySize(op);
      return n;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Printing. Binding strength: 0 = `+`, 1 = `.`, 2 = atom.

namespace {

int Strength(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kOr: return 0;
    case Predicate::Kind::kAnd: return 1;
    default: return 2;
  }
}

int Strength(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kUnion: return 0;
    case Policy::Kind::kSeq: return 1;
    case Policy::Kind::kFilter: return Strength(p.predicate());
    default: return 2;
  }
}

void Print(const Predicate& a, std::string& out);

void PrintAt(const Predicate& a, int min_strength, std::string& out) {
  if (Strength(a) < min_strength) {
    out += '(';
    Print(a, out);
    out += ')';
  } else {
    Print(a, out);
  }
}

void Print(const Predicate& a, std::string& out) {
  switch (a.kind()) {
    case Predicate::Kind::kOne: out += '1'; return;
    case Predicate::Kind::kZero: out += '0'; return;
    case Predicate::Kind::kTest:
      out += a.field().name();
      out += " = ";
      out += a.value().ToString();
      return;
    case Predicate::Kind::kOr: {
      bool first = true;
      for (const Predicate& op : a.operands()) {
        if (!first) out += " + ";
        first = false;
        PrintAt(op, 0, out);
      }
      return;
    }
    case Predicate::Kind::kAnd:
      // Left-associated chains print flat; a right operand that is itself a
      // conjunction needs parentheses to keep its grouping.
      PrintAt(a.operands()[0], 1, out);
      out += " . ";
      PrintAt(a.operands()[1], 2, out);
      return;
    case Predicate::Kind::kNot:
      out += '~';
      PrintAt(a.operands()[0], 2, out);
      return;
  }
}

void Print(const Policy& p, std::string& out);

void PrintAt(const Policy& p, int min_strength, std::string& out) {
  if (Strength(p) < min_strength) {
    out += '(';
    Print(p, out);
    out += ')';
  } else {
    Print(p, out);
  }
}

void Print(const Policy& p, std::string& out) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      Print(p.predicate(), out);
      return;
    case Policy::Kind::kMod:
      out += p.field().name();
      out += " <- ";
      out += p.value().ToString();
      return;
    case Policy::Kind::kUnion: {
      bool first = true;
      for (const Policy& op : p.operands()) {
        if (!first) out += " + ";
        first = false;
        PrintAt(op, 0, out);
      }
      return;
    }
    case Policy::Kind::kSeq:
      PrintAt(p.operands()[0], 1, out);
      out += " . ";
      PrintAt(p.operands()[1], 2, out);
      return;
    case Policy::Kind::kRep:
      out += '(';
      Print(p.operands()[0], out);
      out += ")^";
      out += std::to_string(p.count());
      return;
  }
}

}  // namespace

std::string ToString(const Predicate& a) {
  std::string out;
  Print(a, out);
  return out;
}

std::string ToString(const Policy& p) {
  std::string out;
  Print(p, out);
  return out;
}

namespace {

bool PredicateHasNegation(const Predicate& a) {
  if (a.kind() == Predicate::Kind::kNot) return true;
  for (const Predicate& op : a.operands()) {
    if (PredicateHasNegation(op)) return true;
  }
  return false;
}

}  // namespace

bool ContainsNegation(const Policy& p) {
  if (p.kind() == Policy::Kind::kFilter) return PredicateHasNegation(p.predicate());
  for (const Policy& op : p.operands()) {
    if (ContainsNegation(op)) return true;
  }
  return false;
}

bool ContainsRepetition(const Policy& p) {
  if (p.kind() == Policy::Kind::kRep) return true;
  for (const Policy& op : p.operands()) {
    if (ContainsRepetition(op)) return true;
  }
  return false;
}

void CollectFieldValues(const Predicate& a,
                        std::set<std::pair<FieldId, Value>>& out) {
  if (a.kind() == Predicate::Kind::kTest) out.emplace(a.field(), a.value());
  for (const Predicate& op : a.operands()) CollectFieldValues(op, out);
}

void CollectFieldValues(const Policy& p,
                        std::set<std::pair<FieldId, Value>>& out) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      CollectFieldValues(p.predicate(), out);
      return;
    case Policy::Kind::kMod:
      out.emplace(p.field(), p.value());
      return;
    default:
      for (const Policy& op : p.operands()) CollectFieldValues(op, out);
  }
}

}  // namespace netkat
