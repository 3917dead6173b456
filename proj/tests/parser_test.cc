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

#include <gtest/gtest.h>

#include <string>

#include "netkat/error.h"
#include "support.h"

namespace netkat {
namespace {

const FieldId kPt("pt");

Value N(std::int64_t n) { return Value::Number(n); }

DomainMap PortDomain() {
  DomainMap d;
  d.Declare(kPt, {N(1), N(2), N(3), N(4), N(5), N(6)});
  return d;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(ParsePolicyTest, HopByHopPolicy) {
  Policy p = ParsePolicy("pt = 1 . pt <- 5 + pt = 6 . pt <- 2", PortDomain());
  Policy expected = Policy::Union(
      Policy::Seq(Policy::Test(kPt, N(1)), Policy::Mod(kPt, N(5))),
      Policy::Seq(Policy::Test(kPt, N(6)), Policy::Mod(kPt, N(2))));
  EXPECT_TRUE(StructuralEq(p, expected));
}

TEST(ParsePolicyTest, Constants) {
  EXPECT_EQ(ParsePolicy("1", PortDomain()), Policy::One());
  EXPECT_EQ(ParsePolicy("0", PortDomain()), Policy::Zero());
}

TEST(ParsePolicyTest, RepetitionOverBindings) {
  Bindings b;
  b.emplace("p", Policy::Mod(kPt, N(1)));
  b.emplace("t", Policy::Mod(kPt, N(2)));
  EXPECT_EQ(ParsePolicy("(p . t)^3", PortDomain(), b),
            Policy::Rep(Policy::Seq(b.at("p"), b.at("t")), 3));
}

TEST(ParsePolicyTest, Precedence) {
  // ~ binds tighter than ., which binds tighter than +.
  Policy p = ParsePolicy("~pt = 1 . pt = 2 + pt = 3", PortDomain());
  Policy expected = Policy::Union(
      Policy::Filter(Predicate::And(Predicate::Not(Predicate::Test(kPt, N(1))),
                                    Predicate::Test(kPt, N(2)))),
      Policy::Test(kPt, N(3)));
  EXPECT_EQ(p, expected);
}

TEST(ParsePolicyTest, Errors) {
  DomainMap d = PortDomain();
  EXPECT_EQ(CodeOf([&] { ParsePolicy("pt = 7", d); }),
            ErrorCode::kValueOutOfDomain);
  EXPECT_EQ(CodeOf([&] { ParsePolicy("sw = 1", d); }),
            ErrorCode::kUndeclaredField);
  EXPECT_EQ(CodeOf([&] { ParsePolicy("pt = 1 +", d); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([&] { ParsePolicy("(pt = 1)*", d); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(CodeOf([&] { ParsePolicy("pt = 1 . dup", d); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(CodeOf([&] { ParsePolicy("~(pt <- 1)", d); }),
            ErrorCode::kSyntaxError);
}

TEST(ParsePolicyTest, SyntaxErrorCarriesPosition) {
  try {
    ParsePolicy("pt = 1 .\n  + pt = 2", PortDomain());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParsePolicyTest, DeepNestingIsRejectedNotOverflowed) {
  std::string deep(100000, '(');
  EXPECT_EQ(CodeOf([&] { ParsePolicy(deep, PortDomain()); }),
            ErrorCode::kSyntaxError);
}

TEST(ParseProblemTest, SimpleNetworkFixture) {
  SafetyProblem problem = testing::LoadProblem("two_switch_p1_in1.problem");
  Policy eq1 = Policy::Union(
      {Policy::Seq(Policy::Test(kPt, N(5)), Policy::Mod(kPt, N(6))),
       Policy::Seq(Policy::Test(kPt, N(6)), Policy::Mod(kPt, N(5))),
       Policy::Test(kPt, N(1)), Policy::Test(kPt, N(2)),
       Policy::Test(kPt, N(3)), Policy::Test(kPt, N(4))});
  EXPECT_TRUE(StructuralEq(problem.topology, eq1));
  EXPECT_EQ(problem.ingress, Predicate::Test(kPt, N(1)));
  EXPECT_FALSE(problem.unfold_n.has_value());
}

TEST(ParseProblemTest, MissingSection) {
  EXPECT_EQ(CodeOf([] {
              ParseProblem(
                  "domains:\n pt: 1..2\npolicy: 1\ntopology: 1\ningress: 1\n");
            }),
            ErrorCode::kMissingSection);
}

TEST(ParseProblemTest, UndeclaredFieldInEgress) {
  EXPECT_EQ(CodeOf([] {
              ParseProblem("domains:\n pt: 1..2\npolicy: 1\ntopology: 1\n"
                           "ingress: 1\negress: sw = 1\n");
            }),
            ErrorCode::kUndeclaredField);
}

TEST(ParseProblemTest, SectionsInAnyOrderWithComments) {
  SafetyProblem p = ParseProblem(
      "# header\negress: pt = 2  # hazard\ningress: pt = 1\n"
      "unfold: 3\ntopology: 1\npolicy: pt = 1 . pt <- 2\n"
      "domains:\n  pt: 1, 2\n");
  EXPECT_EQ(p.unfold_n, 3u);
  EXPECT_EQ(p.domains.Values(kPt).size(), 2u);
}

TEST(ParseProblemTest, DuplicateSectionIsAnError) {
  EXPECT_EQ(CodeOf([] {
              ParseProblem("domains:\n pt: 1\npolicy: 1\npolicy: 0\n"
                           "topology: 1\ningress: 1\negress: 1\n");
            }),
            ErrorCode::kSyntaxError);
}

TEST(ParseProblemTest, FormatRoundTrip) {
  SafetyProblem p = testing::LoadProblem("firewall.problem");
  SafetyProblem q = ParseProblem(FormatProblem(p));
  EXPECT_EQ(p.domains, q.domains);
  EXPECT_TRUE(StructuralEq(p.switch_policy, q.switch_policy));
  EXPECT_TRUE(StructuralEq(p.topology, q.topology));
  EXPECT_EQ(p.ingress, q.ingress);
  EXPECT_EQ(p.egress, q.egress);
}

// Property: printing then parsing yields a structurally equal policy.
TEST(ParserProperty, PrintParseRoundTrip) {
  testing::Rng rng(21);
  testing::RandomShape shape;
  shape.repetition = true;
  for (int i = 0; i < 500; ++i) {
    DomainMap d = testing::RandomDomains(rng, shape);
    Policy p = testing::RandomPolicy(rng, d, shape);
    Policy q = ParsePolicy(ToString(p), d);
    EXPECT_TRUE(StructuralEq(p, q)) << ToString(p) << "\nvs\n" << ToString(q);
  }
}

// Property: parsing terminates (with a value or an Error) on arbitrary input.
TEST(ParserProperty, TotalOnRandomInput) {
  testing::Rng rng(22);
  const std::string alphabet = "pt=<-+.~()^019 \n#*:,dupx";
  DomainMap d = PortDomain();
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const std::size_t len = rng() % 40;
    for (std::size_t k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    try {
      ParsePolicy(s, d);
      ParseProblem(s);
    } catch (const Error&) {
    }
  }
  SUCCEED();
}

}  // namespace
}  // namespace netkat
