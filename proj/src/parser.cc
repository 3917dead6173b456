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

#include "netkat/parser.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netkat/error.h"

namespace netkat {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kPlus,
  kDot,
  kDotDot,
  kTilde,
  kEq,
  kArrow,
  kLParen,
  kRParen,
  kCaret,
  kComma,
  kColon,
  kStar,
  kEnd,
};

struct Lexeme {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  bool line_start;  // first lexeme on its line
};

constexpr std::size_t kMaxNesting = 2000;

constexpr std::array<std::string_view, 7> kKeywords = {
    "domains", "let", "policy", "topology", "ingress", "egress", "unfold"};

bool IsKeyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

[[noreturn]] void Fail(ErrorCode code, const std::string& msg,
                       const Lexeme& at) {
  throw Error(code,
              std::to_string(at.line) + ":" + std::to_string(at.column) +
                  ": " + msg,
              at.line, at.column);
}

std::string Describe(const Lexeme& l) {
  if (l.kind == Tok::kEnd) return "end of input";
  return "'" + l.text + "'";
}

std::vector<Lexeme> Lex(std::string_view src) {
  std::vector<Lexeme> out;
  std::size_t line = 1, col = 1, i = 0;
  bool line_start = true;
  auto is_alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto emit = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(src.substr(i, len)), line, col,
                   line_start});
    line_start = false;
    i += len;
    col += len;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j]))) ++j;
      emit(Tok::kIdent, j - i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      emit(Tok::kNumber, j - i);
      continue;
    }
    switch (c) {
      case '+': emit(Tok::kPlus, 1); continue;
      case '~': emit(Tok::kTilde, 1); continue;
      case '=': emit(Tok::kEq, 1); continue;
      case '(': emit(Tok::kLParen, 1); continue;
      case ')': emit(Tok::kRParen, 1); continue;
      case '^': emit(Tok::kCaret, 1); continue;
      case ',': emit(Tok::kComma, 1); continue;
      case ':': emit(Tok::kColon, 1); continue;
      case '*': emit(Tok::kStar, 1); continue;
      case '.':
        if (i + 1 < src.size() && src[i + 1] == '.') {
          emit(Tok::kDotDot, 2);
        } else {
          emit(Tok::kDot, 1);
        }
        continue;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '-') {
          emit(Tok::kArrow, 2);
          continue;
        }
        break;
      default:
        break;
    }
    Lexeme bad{Tok::kEnd, std::string(1, c), line, col, line_start};
    Fail(ErrorCode::kSyntaxError,
         "unexpected character '" + std::string(1, c) + "'", bad);
  }
  out.push_back({Tok::kEnd, "", line, col, true});
  return out;
}

std::uint64_t ParseNat(const Lexeme& l) {
  std::uint64_t v = 0;
  auto [ptr, ec] =
      std::from_chars(l.text.data(), l.text.data() + l.text.size(), v);
  if (ec != std::errc() || v > static_cast<std::uint64_t>(INT64_MAX)) {
    Fail(ErrorCode::kSyntaxError, "number out of range " + Describe(l), l);
  }
  return v;
}

// Recursive-descent expression parser over a lexeme range [pos, end).
class ExprParser {
 public:
  ExprParser(const std::vector<Lexeme>& lexemes, std::size_t pos,
             std::size_t end, const DomainMap& domains,
             const Bindings& bindings)
      : lx_(lexemes), pos_(pos), end_(end), domains_(domains),
        bindings_(bindings) {}

  Policy ParseAll() {
    Policy p = ParseUnion();
    if (pos_ < end_) {
      Fail(ErrorCode::kSyntaxError, "unexpected " + Describe(Peek()), Peek());
    }
    return p;
  }

  static Predicate RequirePredicate(const Policy& p, const Lexeme& at,
                                    std::string_view what) {
    if (p.kind() != Policy::Kind::kFilter) {
      Fail(ErrorCode::kSyntaxError,
           std::string(what) + " must be a predicate (tests, 0, 1, +, ., ~)",
           at);
    }
    return p.predicate();
  }

 private:
  const Lexeme& Peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    if (k >= end_) return lx_[std::min(end_, lx_.size() - 1)];
    return lx_[k];
  }
  bool AtEnd() const { return pos_ >= end_; }
  bool Check(Tok kind) const { return !AtEnd() && Peek().kind == kind; }
  const Lexeme& Advance() { return lx_[pos_++]; }
  const Lexeme& Expect(Tok kind, std::string_view what) {
    if (!Check(kind)) {
      Fail(ErrorCode::kSyntaxError,
           "expected " + std::string(what) + ", found " + Describe(Peek()),
           Peek());
    }
    return Advance();
  }

  struct DepthGuard {
    explicit DepthGuard(ExprParser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        Fail(ErrorCode::kSyntaxError, "expression nested too deeply",
             parser.Peek());
      }
    }
    ~DepthGuard() { --parser.depth_; }
    ExprParser& parser;
  };

  Policy ParseUnion() {
    DepthGuard guard(*this);
    Policy p = ParseSeq();
    while (Check(Tok::kPlus)) {
      Advance();
      p = Policy::Union(std::move(p), ParseSeq());
    }
    return p;
  }

  Policy ParseSeq() {
    Policy p = ParseUnary();
    while (Check(Tok::kDot)) {
      Advance();
      p = Policy::Seq(std::move(p), ParseUnary());
    }
    return p;
  }

  Policy ParseUnary() {
    DepthGuard guard(*this);
    if (Check(Tok::kTilde)) {
      const Lexeme& tilde = Advance();
      Policy operand = ParseUnary();
      return Policy::Filter(Predicate::Not(
          RequirePredicate(operand, tilde, "operand of '~'")));
    }
    Policy p = ParseAtom();
    while (Check(Tok::kCaret)) {
      Advance();
      const Lexeme& n = Expect(Tok::kNumber, "repetition count");
      p = Policy::Rep(std::move(p), static_cast<std::size_t>(ParseNat(n)));
    }
    if (Check(Tok::kStar)) {
      Fail(ErrorCode::kUnsupportedConstruct,
           "Kleene star is not part of the analyzed fragment; use a bounded "
           "repetition (e)^n",
           Peek());
    }
    return p;
  }

  Value ParseValue(FieldId field, const Lexeme& field_lexeme) {
    Value v;
    if (Check(Tok::kNumber)) {
      v = Value::Number(static_cast<std::int64_t>(ParseNat(Advance())));
    } else if (Check(Tok::kIdent)) {
      v = Value::Symbol(Advance().text);
    } else {
      Fail(ErrorCode::kSyntaxError,
           "expected a value, found " + Describe(Peek()), Peek());
    }
    if (!domains_.InDomain(field, v)) {
      Fail(ErrorCode::kValueOutOfDomain,
           "value " + v.ToString() + " is not in the domain of field '" +
               std::string(field.name()) + "'",
           field_lexeme);
    }
    return v;
  }

  Policy ParseAtom() {
    if (AtEnd()) {
      Fail(ErrorCode::kSyntaxError, "unexpected end of expression", Peek());
    }
    const Lexeme& l = Peek();
    switch (l.kind) {
      case Tok::kNumber: {
        Advance();
        if (l.text == "0") return Policy::Zero();
        if (l.text == "1") return Policy::One();
        Fail(ErrorCode::kSyntaxError,
             "only the constants 0 and 1 may appear as policies, found " +
                 Describe(l),
             l);
      }
      case Tok::kLParen: {
        Advance();
        Policy p = ParseUnion();
        Expect(Tok::kRParen, "')'");
        return p;
      }
      case Tok::kIdent: {
        Advance();
        if (Check(Tok::kEq) || Check(Tok::kArrow)) {
          bool is_mod = Peek().kind == Tok::kArrow;
          Advance();
          FieldId field(l.text);
          if (!domains_.Contains(field)) {
            Fail(ErrorCode::kUndeclaredField,
                 "field '" + l.text + "' has no declared domain", l);
          }
          Value v = ParseValue(field, l);
          return is_mod ? Policy::Mod(field, v) : Policy::Test(field, v);
        }
        if (auto it = bindings_.find(l.text); it != bindings_.end()) {
          return it->second;
        }
        if (l.text == "dup") {
          Fail(ErrorCode::kUnsupportedConstruct,
               "dup is not part of the analyzed fragment", l);
        }
        Fail(ErrorCode::kSyntaxError,
             "unknown name '" + l.text +
                 "' (expected a test 'f = v', a modification 'f <- v' or a "
                 "let-bound name)",
             l);
      }
      case Tok::kStar:
        Fail(ErrorCode::kUnsupportedConstruct,
             "Kleene star is not part of the analyzed fragment", l);
      default:
        Fail(ErrorCode::kSyntaxError, "unexpected " + Describe(l), l);
    }
  }

  const std::vector<Lexeme>& lx_;
  std::size_t pos_;
  std::size_t end_;
  const DomainMap& domains_;
  const Bindings& bindings_;
  std::size_t depth_ = 0;
};

// A section of a problem file: lexemes [begin, end) following the header.
struct Section {
  std::string name;
  const Lexeme* header;
  std::size_t begin;
  std::size_t end;
};

bool StartsSection(const std::vector<Lexeme>& lx, std::size_t i) {
  if (lx[i].kind != Tok::kIdent || !lx[i].line_start) return false;
  if (lx[i].text == "let") return true;
  return IsKeyword(lx[i].text) && lx[i + 1].kind == Tok::kColon;
}

std::vector<Section> SplitSections(const std::vector<Lexeme>& lx) {
  std::vector<Section> sections;
  std::size_t i = 0;
  const std::size_t last = lx.size() - 1;  // kEnd
  while (i < last) {
    if (!StartsSection(lx, i)) {
      Fail(ErrorCode::kSyntaxError,
           "expected a section (domains:, let, policy:, topology:, ingress:, "
           "egress:, unfold:), found " +
               Describe(lx[i]),
           lx[i]);
    }
    Section s{lx[i].text, &lx[i], 0, 0};
    i += (s.name == "let") ? 1 : 2;
    s.begin = i;
    while (i < last && !StartsSection(lx, i)) ++i;
    s.end = i;
    sections.push_back(std::move(s));
  }
  return sections;
}

DomainMap ParseDomains(const std::vector<Lexeme>& lx, const Section& s) {
  DomainMap domains;
  std::size_t i = s.begin;
  auto expect = [&](Tok kind, std::string_view what) -> const Lexeme& {
    if (i >= s.end || lx[i].kind != kind) {
      const Lexeme& at = lx[std::min(i, s.end)];
      Fail(ErrorCode::kSyntaxError,
           "expected " + std::string(what) + " in domains, found " +
               Describe(at),
           at);
    }
    return lx[i++];
  };
  while (i < s.end) {
    const Lexeme& name = expect(Tok::kIdent, "a field name");
    if (IsKeyword(name.text) || name.text == "dup") {
      Fail(ErrorCode::kSyntaxError,
           "'" + name.text + "' is reserved and cannot name a field", name);
    }
    expect(Tok::kColon, "':'");
    std::vector<Value> values;
    while (true) {
      if (i < s.end && lx[i].kind == Tok::kNumber) {
        std::uint64_t lo = ParseNat(lx[i++]);
        if (i < s.end && lx[i].kind == Tok::kDotDot) {
          ++i;
          const Lexeme& hi_lex = expect(Tok::kNumber, "range upper bound");
          std::uint64_t hi = ParseNat(hi_lex);
          if (hi < lo || hi - lo > 1'000'000) {
            Fail(ErrorCode::kSyntaxError, "invalid range", hi_lex);
          }
          for (std::uint64_t v = lo; v <= hi; ++v) {
            values.push_back(Value::Number(static_cast<std::int64_t>(v)));
          }
        } else {
          values.push_back(Value::Number(static_cast<std::int64_t>(lo)));
        }
      } else if (i < s.end && lx[i].kind == Tok::kIdent) {
        values.push_back(Value::Symbol(lx[i++].text));
      } else {
        const Lexeme& at = lx[std::min(i, s.end)];
        Fail(ErrorCode::kSyntaxError,
             "expected a value in the domain of '" + name.text + "', found " +
                 Describe(at),
             at);
      }
      if (i < s.end && lx[i].kind == Tok::kComma) {
        ++i;
        continue;
      }
      break;
    }
    try {
      domains.Declare(FieldId(name.text), std::move(values));
    } catch (const Error& e) {
      Fail(ErrorCode::kSyntaxError, e.what(), name);
    }
  }
  return domains;
}

}  // namespace

Policy ParsePolicy(std::string_view text, const DomainMap& domains,
                   const Bindings& bindings) {
  std::vector<Lexeme> lx = Lex(text);
  ExprParser parser(lx, 0, lx.size() - 1, domains, bindings);
  return parser.ParseAll();
}

Predicate ParsePredicate(std::string_view text, const DomainMap& domains,
                         const Bindings& bindings) {
  std::vector<Lexeme> lx = Lex(text);
  ExprParser parser(lx, 0, lx.size() - 1, domains, bindings);
  return ExprParser::RequirePredicate(parser.ParseAll(), lx.front(),
                                      "expression");
}

SafetyProblem ParseProblem(std::string_view contents) {
  std::vector<Lexeme> lx = Lex(contents);
  std::vector<Section> sections = SplitSections(lx);

  SafetyProblem problem;
  bool have_domains = false;
  for (const Section& s : sections) {
    if (s.name != "domains") continue;
    if (have_domains) {
      Fail(ErrorCode::kSyntaxError, "duplicate 'domains:' section", *s.header);
    }
    problem.domains = ParseDomains(lx, s);
    have_domains = true;
  }

  Bindings bindings;
  std::set<std::string> seen;
  for (const Section& s : sections) {
    if (s.name == "domains") continue;
    if (s.name == "let") {
      if (s.begin + 1 >= s.end || lx[s.begin].kind != Tok::kIdent ||
          lx[s.begin + 1].kind != Tok::kEq) {
        Fail(ErrorCode::kSyntaxError, "expected 'let <name> = <policy>'",
             *s.header);
      }
      const Lexeme& name = lx[s.begin];
      if (IsKeyword(name.text) || name.text == "dup") {
        Fail(ErrorCode::kSyntaxError,
             "'" + name.text + "' is reserved and cannot be bound", name);
      }
      if (problem.domains.Contains(FieldId(name.text))) {
        Fail(ErrorCode::kSyntaxError,
             "'" + name.text + "' is a field and cannot be bound", name);
      }
      ExprParser parser(lx, s.begin + 2, s.end, problem.domains, bindings);
      bindings.insert_or_assign(name.text, parser.ParseAll());
      continue;
    }
    if (!seen.insert(s.name).second) {
      Fail(ErrorCode::kSyntaxError, "duplicate '" + s.name + ":' section",
           *s.header);
    }
    if (s.name == "unfold") {
      if (s.end != s.begin + 1 || lx[s.begin].kind != Tok::kNumber) {
        Fail(ErrorCode::kSyntaxError, "expected 'unfold: <natural>'",
             *s.header);
      }
      problem.unfold_n = static_cast<std::size_t>(ParseNat(lx[s.begin]));
      continue;
    }
    if (s.begin == s.end) {
      Fail(ErrorCode::kSyntaxError, "empty '" + s.name + ":' section",
           *s.header);
    }
    ExprParser parser(lx, s.begin, s.end, problem.domains, bindings);
    Policy p = parser.ParseAll();
    if (s.name == "policy") {
      problem.switch_policy = p;
    } else if (s.name == "topology") {
      problem.topology = p;
    } else if (s.name == "ingress") {
      problem.ingress = ExprParser::RequirePredicate(p, *s.header, "ingress");
    } else if (s.name == "egress") {
      problem.egress = ExprParser::RequirePredicate(p, *s.header, "egress");
    }
  }

  std::vector<std::string> missing;
  if (!have_domains) missing.push_back("domains");
  for (std::string_view name : {"policy", "topology", "ingress", "egress"}) {
    if (!seen.contains(std::string(name))) missing.emplace_back(name);
  }
  if (!missing.empty()) {
    std::string msg = "missing section(s):";
    for (const std::string& m : missing) msg += " " + m + ":";
    throw Error(ErrorCode::kMissingSection, msg);
  }
  return problem;
}

std::string FormatProblem(const SafetyProblem& problem,
                          const ProblemLayout& layout) {
  std::string out;
  for (const std::string& c : layout.header_comments) out += "# " + c + "\n";
  out += "domains:\n";
  for (FieldId f : problem.domains.Fields()) {
    out += "  ";
    out += f.name();
    out += ":";
    bool first = true;
    for (Value v : problem.domains.Values(f)) {
      out += first ? " " : ", ";
      first = false;
      out += v.ToString();
    }
    out += "\n";
  }
  for (const auto& [name, policy] : layout.bindings) {
    out += "let " + name + " = " + ToString(policy) + "\n";
  }
  out += "policy: " +
         layout.policy_name.value_or(ToString(problem.switch_policy)) + "\n";
  out += "topology: " +
         layout.topology_name.value_or(ToString(problem.topology)) + "\n";
  out += "ingress: " + ToString(problem.ingress) + "\n";
  out += "egress: " + ToString(problem.egress) + "\n";
  if (problem.unfold_n) {
    out += "unfold: " + std::to_string(*problem.unfold_n) + "\n";
  }
  return out;
}

}  // namespace netkat
