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

#include <gtest/gtest.h>

#include <algorithm>

#include "netkat/error.h"
#include "netkat/oracle.h"
#include "netkat/unfold.h"
#include "support.h"

namespace netkat {
namespace {

const FieldId kPt("pt");
const FieldId kSw("sw");

Value N(std::int64_t n) { return Value::Number(n); }
Token T(FieldId f, std::int64_t v) { return Token::Test(f, N(v)); }
Token M(FieldId f, std::int64_t v) { return Token::Mod(f, N(v)); }

// Reference subsumption: p is obtained from q by deleting tokens.
bool RefSubsequence(const Path& p, const Path& q) {
  std::vector<Token> a, b;
  for (const Token& t : p.tokens) {
    if (t.kind != Token::Kind::kOne) a.push_back(t);
  }
  for (const Token& t : q.tokens) {
    if (t.kind != Token::Kind::kOne) b.push_back(t);
  }
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.size();
}

TEST(SubsumesTest, Examples) {
  Path shorter{{T(kPt, 1), M(kPt, 4)}};
  Path longer{{T(kPt, 1), M(kPt, 5), M(kPt, 6), M(kPt, 4)}};
  EXPECT_TRUE(Subsumes(shorter, longer));
  EXPECT_TRUE(StrictlySubsumes(shorter, longer));
  EXPECT_FALSE(Subsumes(longer, shorter));
  EXPECT_TRUE(Subsumes(longer, longer));
  EXPECT_FALSE(StrictlySubsumes(longer, longer));
  EXPECT_FALSE(Subsumes(Path{{M(kPt, 4), T(kPt, 1)}}, longer));
}

TEST(MinimizeTest, DropsSubsumedPaths) {
  Path a{{T(kPt, 1)}};
  Path b{{T(kPt, 1), M(kPt, 2)}};
  Path c{{T(kPt, 2), M(kPt, 3)}};
  EXPECT_EQ(Minimize({a, b, c}), (SumOfPaths{a, c}));
  EXPECT_EQ(Minimize({}), SumOfPaths{});
}

TEST(ExplainTest, SimpleNetworkUnsafe) {
  Explanation e = Explain(testing::LoadProblem("two_switch_p1p2_in1.problem"));
  EXPECT_EQ(e.verdict, Verdict::kUnsafe);
  EXPECT_EQ(e.unfold_n, 6u);
  ASSERT_EQ(e.paths.size(), 1u);
  EXPECT_EQ(e.paths.begin()->ToString(), "pt=1 . pt<-5 . pt<-6 . pt<-4");
}

TEST(ExplainTest, SimpleNetworkSafe) {
  Explanation e = Explain(testing::LoadProblem("two_switch_p1_in1.problem"));
  EXPECT_EQ(e.verdict, Verdict::kSafe);
  EXPECT_TRUE(e.paths.empty());
}

TEST(ExplainTest, IdentityPathWhenIngressIsEgress) {
  Explanation e = Explain(testing::LoadProblem("identity.problem"));
  EXPECT_EQ(e.verdict, Verdict::kUnsafe);
  ASSERT_EQ(e.paths.size(), 1u);
  EXPECT_EQ(e.paths.begin()->ToString(), "pt=1");
}

TEST(ExplainTest, UnfoldBoundResolution) {
  SafetyProblem p = testing::LoadProblem("firewall.problem");
  EXPECT_EQ(ResolveUnfoldBound(p), 4u);
  p.unfold_n = 2;
  EXPECT_EQ(ResolveUnfoldBound(p), 2u);
  ExplainOptions o;
  o.unfold_n = 7;
  EXPECT_EQ(ResolveUnfoldBound(p, o), 7u);
}

TEST(ExplainTest, NoMinimizeIsSuperset) {
  SafetyProblem p = testing::LoadProblem("two_switch_p1p2_in1.problem");
  ExplainOptions raw;
  raw.minimize = false;
  Explanation full = Explain(p, raw);
  Explanation min = Explain(p);
  EXPECT_TRUE(std::includes(full.paths.begin(), full.paths.end(),
                            min.paths.begin(), min.paths.end()));
  EXPECT_EQ(full.stats.canonical_paths, full.paths.size());
}

TEST(JsonTest, RoundTrip) {
  Explanation e = Explain(testing::LoadProblem("firewall.problem"));
  Explanation back = ExplanationFromJson(ExplanationToJson(e));
  EXPECT_EQ(back.verdict, e.verdict);
  EXPECT_EQ(back.paths, e.paths);
  EXPECT_EQ(back.unfold_n, e.unfold_n);
  EXPECT_EQ(back.stats.summands_before_reduction,
            e.stats.summands_before_reduction);
}

TEST(JsonTest, MalformedInput) {
  try {
    ExplanationFromJson("{\"verdict\": 3");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kParseError);
  }
}

TEST(TextTest, Layout) {
  Explanation e = Explain(testing::LoadProblem("two_switch_p1p2_in1.problem"));
  std::string text = ExplanationToText(e);
  EXPECT_NE(text.find("UNSAFE (unfold n = 6)"), std::string::npos);
  EXPECT_NE(text.find("pt=1 . pt<-5 . pt<-6 . pt<-4"), std::string::npos);
}

// Property: minimize agrees with a quadratic reference and is idempotent.
TEST(MinimizeProperty, MatchesReferenceAndIsIdempotent) {
  testing::Rng rng(61);
  testing::RandomShape shape;
  shape.max_domain = 2;
  for (int i = 0; i < 300; ++i) {
    DomainMap d = testing::RandomDomains(rng, shape);
    SumOfPaths s;
    const std::size_t k = rng() % 12;
    for (std::size_t j = 0; j < k; ++j) {
      Path p = testing::RandomPath(rng, d, 5);
      std::erase_if(p.tokens, [](const Token& t) {
        return t.kind == Token::Kind::kZero;
      });
      s.insert(p);
    }
    SumOfPaths expected;
    for (const Path& q : s) {
      bool dominated = false;
      for (const Path& p : s) {
        if (!(p == q) && RefSubsequence(p, q) && !RefSubsequence(q, p)) {
          dominated = true;
        }
      }
      if (!dominated) expected.insert(q);
    }
    SumOfPaths m = Minimize(s);
    EXPECT_EQ(m, expected);
    EXPECT_EQ(Minimize(m), m);
  }
}

// Property: every explanation path admits a packet that both the path and
// the full program accept; a safe verdict means the oracle finds nothing.
TEST(ExplainProperty, ExplanationsAreSound) {
  testing::Rng rng(62);
  testing::RandomShape shape;
  for (int i = 0; i < 150; ++i) {
    SafetyProblem problem = testing::RandomProblem(rng, shape);
    ExplainOptions o;
    o.unfold_n = rng() % 4;
    Explanation e = Explain(problem, o);
    const bool oracle_empty = IsEmptyProgram(problem, *o.unfold_n);
    EXPECT_EQ(e.verdict == Verdict::kSafe, oracle_empty);
    Policy program = BuildProgram(problem, *o.unfold_n);
    for (const Path& p : e.paths) {
      std::optional<Packet> w = FindWitness(PolicyOfPath(p), problem.domains);
      ASSERT_TRUE(w.has_value()) << p.ToString();
      EXPECT_FALSE(Eval(program, *w, problem.domains).empty()) << p.ToString();
    }
  }
}

}  // namespace
}  // namespace netkat
