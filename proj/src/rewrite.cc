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

#include "netkat/rewrite.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netkat/error.h"
#include "netkat/parallel.h"

namespace netkat {

// -----------------------------------------------------------------------------
// FieldOrder

FieldOrder FieldOrder::FromList(std::span<const FieldId> fields) {
  FieldOrder order;
  for (FieldId f : fields) {
    if (!order.rank_.emplace(f, order.rank_.size()).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "field '" + std::string(f.name()) +
                      "' listed twice in the field order");
    }
  }
  return order;
}

bool FieldOrder::Less(FieldId a, FieldId b) const {
  if (a == b) return false;
  if (!rank_.empty()) {
    auto ia = rank_.find(a);
    auto ib = rank_.find(b);
    bool ra = ia != rank_.end();
    bool rb = ib != rank_.end();
    if (ra && rb) return ia->second < ib->second;
    if (ra != rb) return ra;
  }
  return a < b;
}

// -----------------------------------------------------------------------------
// SymbolicState

FieldState SymbolicState::Get(FieldId f) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), f.index(),
      [](const auto& entry, std::uint32_t idx) { return entry.first < idx; });
  if (it == entries_.end() || it->first != f.index()) return FieldState{};
  return it->second;
}

void SymbolicState::Set(FieldId f, FieldState s) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), f.index(),
      [](const auto& entry, std::uint32_t idx) { return entry.first < idx; });
  if (it != entries_.end() && it->first == f.index()) {
    it->second = s;
  } else {
    entries_.insert(it, {f.index(), s});
  }
}

SymbolicState::TestOutcome SymbolicState::Classify(FieldId f, Value v) const {
  FieldState s = Get(f);
  if (s.kind == FieldState::Kind::kUnknown) return TestOutcome::kNarrows;
  return s.value == v ? TestOutcome::kRedundant : TestOutcome::kFails;
}

// -----------------------------------------------------------------------------
// Rules and measure

std::string_view RuleName(Rule r) {
  switch (r) {
    case Rule::kDropOne: return "DropOne";
    case Rule::kZeroToken: return "ZeroToken";
    case Rule::kTestContra: return "TestContra";
    case Rule::kModContra: return "ModContra";
    case Rule::kDuplicateTest: return "DuplicateTest";
    case Rule::kModFilter: return "ModFilter";
    case Rule::kSwap: return "Swap";
  }
  return "?";
}

Measure MeasureOf(std::span<const Token> tokens, const FieldOrder& order) {
  Measure m{tokens.size(), 0};
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_test() && !tokens[i].is_mod()) continue;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (!tokens[j].is_test() && !tokens[j].is_mod()) continue;
      if (order.Less(tokens[j].field, tokens[i].field)) ++m.inversions;
    }
  }
  return m;
}

std::vector<Redex> FindRedexes(std::span<const Token> path,
                               const FieldOrder& order) {
  std::vector<Redex> out;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (path[i].kind == Token::Kind::kOne && n >= 2) {
      out.push_back({Rule::kDropOne, i, i});
    } else if (path[i].kind == Token::Kind::kZero) {
      out.push_back({Rule::kZeroToken, i, i});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!path[j].is_test()) continue;
    const FieldId f = path[j].field;
    const Value w = path[j].value;
    bool mod_between = false;       // some f<-_ strictly between i and j
    bool mod_w_between = false;     // some f<-w strictly between i and j
    for (std::size_t i = j; i-- > 0;) {
      const Token& t = path[i];
      if (t.field != f || (!t.is_test() && !t.is_mod())) continue;
      if (t.is_test()) {
        if (t.value != w && !mod_w_between) {
          out.push_back({Rule::kTestContra, i, j});
        } else if (t.value == w && !mod_between) {
          out.push_back({Rule::kDuplicateTest, i, j});
        }
      } else {
        if (!mod_between) {
          out.push_back({t.value == w ? Rule::kModFilter : Rule::kModContra,
                         i, j});
        }
        mod_between = true;
        if (t.value == w) mod_w_between = true;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Token& a = path[i];
    const Token& b = path[i + 1];
    bool same_kind = (a.is_test() && b.is_test()) || (a.is_mod() && b.is_mod());
    if (same_kind && order.Less(b.field, a.field)) {
      out.push_back({Rule::kSwap, i, i + 1});
    }
  }
  return out;
}

std::optional<Path> ApplyRedex(const Path& path, const Redex& redex) {
  Path out = path;
  switch (redex.rule) {
    case Rule::kZeroToken:
    case Rule::kTestContra:
    case Rule::kModContra:
      return std::nullopt;
    case Rule::kDropOne:
    case Rule::kDuplicateTest:
    case Rule::kModFilter:
      out.tokens.erase(out.tokens.begin() +
                       static_cast<std::ptrdiff_t>(redex.second));
      return out;
    case Rule::kSwap:
      std::swap(out.tokens[redex.first], out.tokens[redex.second]);
      return out;
  }
  return out;
}

std::optional<Path> ReduceWithSchedule(const Path& path,
                                       const FieldOrder& order,
                                       const Schedule& schedule,
                                       const RewriteObserver& observer) {
  if (path.tokens.empty()) return Path{{Token::One()}};
  Path current = path;
  while (true) {
    std::vector<Redex> redexes = FindRedexes(current.tokens, order);
    if (redexes.empty()) return current;
    const Redex& pick = redexes[schedule(redexes)];
    std::optional<Path> next = ApplyRedex(current, pick);
    if (observer) {
      observer({pick.rule, MeasureOf(current.tokens, order),
                next ? MeasureOf(next->tokens, order) : Measure{}});
    }
    if (!next) return std::nullopt;
    current = std::move(*next);
  }
}

// -----------------------------------------------------------------------------
// PathBuilder

void PathBuilder::Report(const RewriteObserver& observer, Rule rule,
                         std::span<const Token> before,
                         std::span<const Token> after) const {
  observer({rule, MeasureOf(before, *order_), MeasureOf(after, *order_)});
}

bool PathBuilder::Append(const Token& token, const RewriteObserver& observer) {
  if (zero_) return false;
  auto with_token = [&] {
    std::vector<Token> v = tokens_;
    v.push_back(token);
    return v;
  };
  switch (token.kind) {
    case Token::Kind::kOne:
      if (observer && !tokens_.empty()) {
        Report(observer, Rule::kDropOne, with_token(), tokens_);
      }
      return true;
    case Token::Kind::kZero:
      if (observer) Report(observer, Rule::kZeroToken, with_token(), {});
      zero_ = true;
      tokens_.clear();
      return false;
    case Token::Kind::kTest: {
      FieldState s = state_.Get(token.field);
      switch (state_.Classify(token.field, token.value)) {
        case SymbolicState::TestOutcome::kFails:
          if (observer) {
            Report(observer,
                   s.kind == FieldState::Kind::kKnown ? Rule::kModContra
                                                      : Rule::kTestContra,
                   with_token(), {});
          }
          zero_ = true;
          tokens_.clear();
          return false;
        case SymbolicState::TestOutcome::kRedundant:
          if (observer) {
            Report(observer,
                   s.kind == FieldState::Kind::kKnown ? Rule::kModFilter
                                                      : Rule::kDuplicateTest,
                   with_token(), tokens_);
          }
          return true;
        case SymbolicState::TestOutcome::kNarrows:
          state_.Set(token.field,
                     {FieldState::Kind::kInitiallyTested, token.value});
          break;
      }
      break;
    }
    case Token::Kind::kMod:
      state_.Set(token.field, {FieldState::Kind::kKnown, token.value});
      break;
  }
  // Bubble the new token left through the trailing run of its own kind.
  tokens_.push_back(token);
  const bool is_test = token.is_test();
  for (std::size_t pos = tokens_.size() - 1; pos > 0; --pos) {
    const Token& prev = tokens_[pos - 1];
    if (prev.is_test() != is_test || !order_->Less(token.field, prev.field)) {
      break;
    }
    if (observer) {
      std::vector<Token> after = tokens_;
      std::swap(after[pos - 1], after[pos]);
      Report(observer, Rule::kSwap, tokens_, after);
    }
    std::swap(tokens_[pos - 1], tokens_[pos]);
  }
  return true;
}

Path PathBuilder::ToPath() const {
  if (tokens_.empty()) return Path{{Token::One()}};
  return Path{tokens_};
}

std::optional<Path> ReducePath(const Path& path, const FieldOrder& order,
                               const RewriteObserver& observer) {
  PathBuilder builder(order);
  for (const Token& t : path.tokens) {
    if (!builder.Append(t, observer)) return std::nullopt;
  }
  return builder.ToPath();
}

bool SymbolicZeroCheck(const Path& path) {
  SymbolicState state;
  for (const Token& t : path.tokens) {
    switch (t.kind) {
      case Token::Kind::kOne:
        break;
      case Token::Kind::kZero:
        return true;
      case Token::Kind::kTest:
        switch (state.Classify(t.field, t.value)) {
          case SymbolicState::TestOutcome::kFails:
            return true;
          case SymbolicState::TestOutcome::kRedundant:
            break;
          case SymbolicState::TestOutcome::kNarrows:
            state.Set(t.field, {FieldState::Kind::kInitiallyTested, t.value});
            break;
        }
        break;
      case Token::Kind::kMod:
        state.Set(t.field, {FieldState::Kind::kKnown, t.value});
        break;
    }
  }
  return false;
}

// -----------------------------------------------------------------------------
// Negation elimination

namespace {

Predicate Nnf(const Predicate& a, bool negate, const DomainMap& domains) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
      return negate ? Predicate::Zero() : a;
    case Predicate::Kind::kZero:
      return negate ? Predicate::One() : a;
    case Predicate::Kind::kTest: {
      if (!negate) return a;
      std::vector<Predicate> others;
      for (Value v : domains.Values(a.field())) {
        if (v != a.value()) others.push_back(Predicate::Test(a.field(), v));
      }
      return Predicate::Or(std::move(others));
    }
    case Predicate::Kind::kOr: {
      if (!negate) {
        std::vector<Predicate> ops;
        for (const Predicate& op : a.operands()) {
          ops.push_back(Nnf(op, false, domains));
        }
        return Predicate::Or(std::move(ops));
      }
      std::optional<Predicate> acc;
      for (const Predicate& op : a.operands()) {
        Predicate n = Nnf(op, true, domains);
        acc = acc ? Predicate::And(*acc, n) : n;
      }
      return acc ? *acc : Predicate::One();
    }
    case Predicate::Kind::kAnd: {
      Predicate l = Nnf(a.operands()[0], negate, domains);
      Predicate r = Nnf(a.operands()[1], negate, domains);
      return negate ? Predicate::Or(l, r) : Predicate::And(l, r);
    }
    case Predicate::Kind::kNot:
      return Nnf(a.operands()[0], !negate, domains);
  }
  return a;
}

}  // namespace

Predicate EliminateNegation(const Predicate& a, const DomainMap& domains) {
  return Nnf(a, false, domains);
}

Policy EliminateNegation(const Policy& p, const DomainMap& domains) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      return Policy::Filter(EliminateNegation(p.predicate(), domains));
    case Policy::Kind::kMod:
      return p;
    case Policy::Kind::kUnion: {
      std::vector<Policy> ops;
      for (const Policy& op : p.operands()) {
        ops.push_back(EliminateNegation(op, domains));
      }
      return Policy::Union(std::move(ops));
    }
    case Policy::Kind::kSeq:
      return Policy::Seq(EliminateNegation(p.operands()[0], domains),
                         EliminateNegation(p.operands()[1], domains));
    case Policy::Kind::kRep:
      return Policy::Rep(EliminateNegation(p.operands()[0], domains),
                         p.count());
  }
  return p;
}

// -----------------------------------------------------------------------------
// Literal distribution

namespace {

using Products = std::set<std::vector<Token>>;

Products Product(const Products& a, const Products& b) {
  Products out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      std::vector<Token> xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      out.insert(std::move(xy));
    }
  }
  return out;
}

Products Distribute(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
      return {{}};
    case Predicate::Kind::kZero:
      return {};
    case Predicate::Kind::kTest:
      return {{Token::Test(a.field(), a.value())}};
    case Predicate::Kind::kOr: {
      Products out;
      for (const Predicate& op : a.operands()) out.merge(Distribute(op));
      return out;
    }
    case Predicate::Kind::kAnd:
      return Product(Distribute(a.operands()[0]), Distribute(a.operands()[1]));
    case Predicate::Kind::kNot:
      throw Error(ErrorCode::kInvalidArgument,
                  "distribution requires a negation-free policy");
  }
  return {};
}

Products Distribute(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      return Distribute(p.predicate());
    case Policy::Kind::kMod:
      return {{Token::Mod(p.field(), p.value())}};
    case Policy::Kind::kUnion: {
      Products out;
      for (const Policy& op : p.operands()) out.merge(Distribute(op));
      return out;
    }
    case Policy::Kind::kSeq:
      return Product(Distribute(p.operands()[0]), Distribute(p.operands()[1]));
    case Policy::Kind::kRep: {
      Products body = Distribute(p.operands()[0]);
      Products out = {{}};
      for (std::size_t k = 0; k < p.count(); ++k) out = Product(out, body);
      return out;
    }
  }
  return {};
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t RawCount(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kOr: {
      std::uint64_t n = 0;
      for (const Predicate& op : a.operands()) n = SatAdd(n, RawCount(op));
      return n;
    }
    case Predicate::Kind::kAnd:
      return SatMul(RawCount(a.operands()[0]), RawCount(a.operands()[1]));
    default:
      return 1;
  }
}

}  // namespace

SumOfPaths ToUnionFreeSum(const Policy& p) {
  SumOfPaths out;
  for (const auto& tokens : Distribute(p)) {
    out.insert(tokens.empty() ? Path{{Token::One()}} : Path{tokens});
  }
  return out;
}

std::uint64_t RawSummandCount(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      return RawCount(p.predicate());
    case Policy::Kind::kMod:
      return 1;
    case Policy::Kind::kUnion: {
      std::uint64_t n = 0;
      for (const Policy& op : p.operands()) n = SatAdd(n, RawSummandCount(op));
      return n;
    }
    case Policy::Kind::kSeq:
      return SatMul(RawSummandCount(p.operands()[0]),
                    RawSummandCount(p.operands()[1]));
    case Policy::Kind::kRep: {
      std::uint64_t body = RawSummandCount(p.operands()[0]);
      std::uint64_t n = 1;
      for (std::size_t k = 0; k < p.count() && n != kSaturated; ++k) {
        n = SatMul(n, body);
      }
      return n;
    }
  }
  return 0;
}

// -----------------------------------------------------------------------------
// Incremental normalization

namespace {

// Prefix sets are kept sorted and duplicate-free.
using Prefixes = std::vector<PathBuilder>;

// Prefix sets larger than this are split into independent chunks of this
// size; chunking is independent of the worker count, so stats are too.
constexpr std::size_t kChunk = 256;

class Normalizer {
 public:
  Normalizer(const NormalizeOptions& options, NormalizeStats& stats)
      : options_(options), stats_(stats) {}

  Prefixes Run(const Policy& p) {
    Prefixes acc{PathBuilder(options_.order)};
    std::vector<Policy> factors;
    Flatten(p, factors);
    for (const Policy& factor : factors) {
      if (acc.empty()) break;
      if (factor.kind() == Policy::Kind::kRep) {
        acc = Repeat(std::move(acc), factor, /*chunked=*/true);
      } else {
        acc = ExtendChunked(acc, factor);
      }
    }
    return acc;
  }

 private:
  static void Flatten(const Policy& p, std::vector<Policy>& out) {
    if (p.kind() == Policy::Kind::kSeq) {
      Flatten(p.operands()[0], out);
      Flatten(p.operands()[1], out);
    } else {
      out.push_back(p);
    }
  }

  // `work` counts prefix extensions; the clock is read at most once per 1024.
  void Tick(std::size_t work) {
    if (!options_.deadline) return;
    ticks_ += work;
    if (ticks_ < next_check_) return;
    next_check_ = ticks_ + 1024;
    if (std::chrono::steady_clock::now() > *options_.deadline) {
      throw Error(ErrorCode::kTimeout, "normalization deadline exceeded");
    }
  }

  void Canonicalize(Prefixes& v) {
    std::sort(v.begin(), v.end());
    auto last = std::unique(v.begin(), v.end());
    stats_.dedup_count += static_cast<std::uint64_t>(v.end() - last);
    v.erase(last, v.end());
  }

  Prefixes AppendAll(const Prefixes& acc, const Token& t) {
    Tick(acc.size() + 1);
    Prefixes out;
    out.reserve(acc.size());
    for (const PathBuilder& b : acc) {
      PathBuilder next = b;
      if (next.Append(t, options_.observer)) {
        out.push_back(std::move(next));
      } else {
        ++stats_.zero_paths;
      }
    }
    // Appending preserves distinctness except where a test was dropped or a
    // token bubbled; re-canonicalize to restore the invariant.
    Canonicalize(out);
    return out;
  }

  Prefixes Extend(const Prefixes& acc, const Predicate& a) {
    if (acc.empty()) return {};
    switch (a.kind()) {
      case Predicate::Kind::kOne:
        return acc;
      case Predicate::Kind::kZero:
        stats_.zero_paths += acc.size();
        return {};
      case Predicate::Kind::kTest:
        return AppendAll(acc, Token::Test(a.field(), a.value()));
      case Predicate::Kind::kOr: {
        Prefixes out;
        for (const Predicate& op : a.operands()) {
          Prefixes part = Extend(acc, op);
          out.insert(out.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
        }
        Canonicalize(out);
        return out;
      }
      case Predicate::Kind::kAnd:
        return Extend(Extend(acc, a.operands()[0]), a.operands()[1]);
      case Predicate::Kind::kNot:
        throw Error(ErrorCode::kInvalidArgument,
                    "normalization requires a negation-free predicate");
    }
    return {};
  }

  Prefixes Extend(const Prefixes& acc, const Policy& p) {
    if (acc.empty()) return {};
    switch (p.kind()) {
      case Policy::Kind::kFilter:
        return Extend(acc, p.predicate());
      case Policy::Kind::kMod:
        return AppendAll(acc, Token::Mod(p.field(), p.value()));
      case Policy::Kind::kUnion: {
        Prefixes out;
        for (const Policy& op : p.operands()) {
          Prefixes part = Extend(acc, op);
          out.insert(out.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
        }
        Canonicalize(out);
        return out;
      }
      case Policy::Kind::kSeq:
        return Extend(Extend(acc, p.operands()[0]), p.operands()[1]);
      case Policy::Kind::kRep:
        return Repeat(acc, p, /*chunked=*/false);
    }
    return {};
  }

  Prefixes ExtendChunked(const Prefixes& acc, const Policy& p) {
    if (acc.size() <= kChunk) return Extend(acc, p);
    const std::size_t chunks = (acc.size() + kChunk - 1) / kChunk;
    std::vector<Prefixes> parts(chunks);
    std::vector<NormalizeStats> part_stats(chunks);
    ParallelFor(chunks, options_.workers,
                [&](std::size_t, std::size_t begin, std::size_t end) {
                  for (std::size_t c = begin; c < end; ++c) {
                    Prefixes slice(
                        acc.begin() + static_cast<std::ptrdiff_t>(c * kChunk),
                        acc.begin() + static_cast<std::ptrdiff_t>(std::min(
                                          acc.size(), (c + 1) * kChunk)));
                    Normalizer worker(options_, part_stats[c]);
                    parts[c] = worker.Extend(slice, p);
                  }
                });
    Prefixes out;
    for (std::size_t c = 0; c < chunks; ++c) {
      stats_.zero_paths += part_stats[c].zero_paths;
      stats_.dedup_count += part_stats[c].dedup_count;
      out.insert(out.end(), std::make_move_iterator(parts[c].begin()),
                 std::make_move_iterator(parts[c].end()));
    }
    Canonicalize(out);
    return out;
  }

  // acc . body^n. When body's sum contains the identity path, acc . body^k
  // grows monotonically in k, so only prefixes first reached in round k - 1
  // need extending in round k.
  Prefixes Repeat(Prefixes acc, const Policy& rep, bool chunked) {
    const Policy& body = rep.operands()[0];
    const std::size_t n = rep.count();
    if (n == 0 || acc.empty()) return acc;
    auto extend = [&](const Prefixes& v) {
      return chunked ? ExtendChunked(v, body) : Extend(v, body);
    };
    NormalizeStats probe_stats;
    Normalizer probe(options_, probe_stats);
    Prefixes identity{PathBuilder(options_.order)};
    Prefixes body_sum = probe.Extend(identity, body);
    bool has_identity =
        std::binary_search(body_sum.begin(), body_sum.end(), identity[0]);
    if (!has_identity) {
      for (std::size_t k = 0; k < n && !acc.empty(); ++k) acc = extend(acc);
      return acc;
    }
    Prefixes result = std::move(acc);
    Prefixes frontier = result;
    for (std::size_t k = 0; k < n && !frontier.empty(); ++k) {
      Prefixes next = extend(frontier);
      Prefixes fresh;
      std::set_difference(next.begin(), next.end(), result.begin(),
                          result.end(), std::back_inserter(fresh));
      stats_.dedup_count += next.size() - fresh.size();
      Prefixes merged;
      merged.reserve(result.size() + fresh.size());
      std::merge(result.begin(), result.end(), fresh.begin(), fresh.end(),
                 std::back_inserter(merged));
      result = std::move(merged);
      frontier = std::move(fresh);
    }
    return result;
  }

  const NormalizeOptions& options_;
  NormalizeStats& stats_;
  std::uint64_t ticks_ = 0;
  std::uint64_t next_check_ = 0;
};

}  // namespace

SumOfPaths Normalize(const Policy& p, const DomainMap& domains,
                     const NormalizeOptions& options, NormalizeStats* stats) {
  NormalizeStats local;
  NormalizeStats& s = stats ? *stats : local;
  s = NormalizeStats{};
  Policy positive = EliminateNegation(p, domains);
  s.summands_before_reduction = RawSummandCount(positive);
  Normalizer normalizer(options, s);
  SumOfPaths out;
  for (const PathBuilder& b : normalizer.Run(positive)) {
    out.insert(b.ToPath());
  }
  return out;
}

SumOfPaths NormalizeByDistribution(const Policy& p, const DomainMap& domains,
                                   const FieldOrder& order) {
  SumOfPaths out;
  for (const Path& path : ToUnionFreeSum(EliminateNegation(p, domains))) {
    if (std::optional<Path> r = ReducePath(path, order)) {
      out.insert(std::move(*r));
    }
  }
  return out;
}

}  // namespace netkat
