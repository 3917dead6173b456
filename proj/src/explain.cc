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

#include "netkat/explain.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "netkat/error.h"
#include "netkat/parallel.h"
#include "netkat/unfold.h"

namespace netkat {
namespace {

using Json = nlohmann::json;

std::vector<Token> Significant(const Path& p) {
  std::vector<Token> out;
  out.reserve(p.tokens.size());
  for (const Token& t : p.tokens) {
    if (t.kind != Token::Kind::kOne) out.push_back(t);
  }
  return out;
}

bool IsSubsequence(const std::vector<Token>& small,
                   const std::vector<Token>& large) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < large.size() && i < small.size(); ++j) {
    if (small[i] == large[j]) ++i;
  }
  return i == small.size();
}

std::uint64_t Signature(const std::vector<Token>& tokens) {
  std::uint64_t sig = 0;
  for (const Token& t : tokens) {
    std::size_t h = std::hash<std::int64_t>{}(t.value.raw());
    h = h * 31 + static_cast<std::size_t>(t.kind);
    h = h * 31 + (t.kind == Token::Kind::kTest || t.kind == Token::Kind::kMod
                      ? t.field.index()
                      : 0);
    sig |= std::uint64_t{1} << (h % 64);
  }
  return sig;
}

Json TokenToJson(const Token& t) {
  Json j;
  switch (t.kind) {
    case Token::Kind::kOne:
      j["op"] = "one";
      return j;
    case Token::Kind::kZero:
      j["op"] = "zero";
      return j;
    case Token::Kind::kTest:
      j["op"] = "test";
      break;
    case Token::Kind::kMod:
      j["op"] = "mod";
      break;
  }
  j["field"] = std::string(t.field.name());
  if (t.value.is_symbol()) {
    j["value"] = t.value.symbol();
  } else {
    j["value"] = t.value.number();
  }
  return j;
}

Token TokenFromJson(const Json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "one") return Token::One();
  if (op == "zero") return Token::Zero();
  if (op != "test" && op != "mod") {
    throw Error(ErrorCode::kParseError, "unknown token op '" + op + "'");
  }
  FieldId f(j.at("field").get<std::string>());
  const Json& jv = j.at("value");
  Value v = jv.is_string() ? Value::Symbol(jv.get<std::string>())
                           : Value::Number(jv.get<std::int64_t>());
  return op == "test" ? Token::Test(f, v) : Token::Mod(f, v);
}

}  // namespace

bool Subsumes(const Path& p, const Path& q) {
  return IsSubsequence(Significant(p), Significant(q));
}

bool StrictlySubsumes(const Path& p, const Path& q) {
  return p != q && Subsumes(p, q);
}

SumOfPaths Minimize(const SumOfPaths& s) {
  struct Entry {
    const Path* path;
    std::vector<Token> tokens;
    std::uint64_t sig;
  };
  std::vector<Entry> entries;
  entries.reserve(s.size());
  for (const Path& p : s) {
    std::vector<Token> t = Significant(p);
    std::uint64_t sig = Signature(t);
    entries.push_back({&p, std::move(t), sig});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return a.tokens.size() < b.tokens.size();
                   });
  // Distinct canonical paths of equal significant length are never
  // subsequences of each other, so only strictly shorter paths can subsume.
  std::vector<char> removed(entries.size(), 0);
  ParallelFor(entries.size(), 0,
              [&](std::size_t, std::size_t begin, std::size_t end) {
                for (std::size_t qi = begin; qi < end; ++qi) {
                  const Entry& q = entries[qi];
                  for (std::size_t pi = 0; pi < qi; ++pi) {
                    const Entry& p = entries[pi];
                    if (p.tokens.size() >= q.tokens.size()) break;
                    if ((p.sig & ~q.sig) != 0) continue;
                    if (IsSubsequence(p.tokens, q.tokens)) {
                      removed[qi] = 1;
                      break;
                    }
                  }
                }
              });
  SumOfPaths out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!removed[i]) out.insert(*entries[i].path);
  }
  return out;
}

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kSafe ? "safe" : "unsafe";
}

std::size_t ResolveUnfoldBound(const SafetyProblem& problem,
                               const ExplainOptions& options) {
  if (options.unfold_n) return *options.unfold_n;
  if (problem.unfold_n) return *problem.unfold_n;
  return DefaultUnfoldBound(problem.topology);
}

Explanation Explain(const SafetyProblem& problem,
                    const ExplainOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Explanation e;
  e.unfold_n = ResolveUnfoldBound(problem, options);
  NormalizeStats ns;
  SumOfPaths canonical = Normalize(BuildProgram(problem, e.unfold_n),
                                   problem.domains, options.normalize, &ns);
  e.stats.summands_before_reduction = ns.summands_before_reduction;
  e.stats.zero_paths = ns.zero_paths;
  e.stats.dedup_count = ns.dedup_count;
  e.stats.canonical_paths = canonical.size();
  e.paths = options.minimize ? Minimize(canonical) : std::move(canonical);
  e.verdict = e.paths.empty() ? Verdict::kSafe : Verdict::kUnsafe;
  e.stats.elapsed_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return e;
}

std::string ExplanationToJson(const Explanation& e, bool include_stats) {
  Json j;
  j["verdict"] = std::string(VerdictName(e.verdict));
  j["unfold_n"] = e.unfold_n;
  Json paths = Json::array();
  for (const Path& p : e.paths) {
    Json tokens = Json::array();
    for (const Token& t : p.tokens) tokens.push_back(TokenToJson(t));
    paths.push_back(std::move(tokens));
  }
  j["paths"] = std::move(paths);
  if (include_stats) {
    j["stats"] = {
        {"summands_before_reduction", e.stats.summands_before_reduction},
        {"zero_paths", e.stats.zero_paths},
        {"dedup_count", e.stats.dedup_count},
        {"canonical_paths", e.stats.canonical_paths},
        {"elapsed_seconds", e.stats.elapsed_seconds},
    };
  }
  return j.dump(2) + "\n";
}

Explanation ExplanationFromJson(std::string_view json) {
  try {
    Json j = Json::parse(json);
    Explanation e;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "safe" && verdict != "unsafe") {
      throw Error(ErrorCode::kParseError, "unknown verdict '" + verdict + "'");
    }
    e.verdict = verdict == "safe" ? Verdict::kSafe : Verdict::kUnsafe;
    e.unfold_n = j.at("unfold_n").get<std::size_t>();
    for (const Json& jp : j.at("paths")) {
      Path p;
      for (const Json& jt : jp) p.tokens.push_back(TokenFromJson(jt));
      e.paths.insert(std::move(p));
    }
    if (j.contains("stats")) {
      const Json& s = j["stats"];
      e.stats.summands_before_reduction =
          s.value("summands_before_reduction", std::uint64_t{0});
      e.stats.zero_paths = s.value("zero_paths", std::uint64_t{0});
      e.stats.dedup_count = s.value("dedup_count", std::uint64_t{0});
      e.stats.canonical_paths = s.value("canonical_paths", std::uint64_t{0});
      e.stats.elapsed_seconds = s.value("elapsed_seconds", 0.0);
    }
    return e;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed explanation JSON: ") + ex.what());
  }
}

std::string ExplanationToText(const Explanation& e, bool include_stats) {
  std::string out = e.verdict == Verdict::kSafe ? "SAFE" : "UNSAFE";
  out += " (unfold n = " + std::to_string(e.unfold_n) + ")\n";
  if (e.verdict == Verdict::kUnsafe) {
    out += std::to_string(e.paths.size()) +
           (e.paths.size() == 1 ? " explanation:\n" : " explanations:\n");
    for (const Path& p : e.paths) out += "  " + p.ToString() + "\n";
  }
  if (include_stats) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof(elapsed), "%.6f", e.stats.elapsed_seconds);
    out += "stats:\n";
    out += "  summands_before_reduction: " +
           std::to_string(e.stats.summands_before_reduction) + "\n";
    out += "  zero_paths: " + std::to_string(e.stats.zero_paths) + "\n";
    out += "  dedup_count: " + std::to_string(e.stats.dedup_count) + "\n";
    out += "  canonical_paths: " + std::to_string(e.stats.canonical_paths) +
           "\n";
    out += "  elapsed_seconds: " + std::string(elapsed) + "\n";
  }
  return out;
}

}  // namespace netkat
