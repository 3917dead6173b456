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

#include <gtest/gtest.h>

#include "netkat/error.h"
#include "netkat/oracle.h"
#include "support.h"

namespace netkat {
namespace {

const FieldId kPt("pt");
const FieldId kSw("sw");

Value N(std::int64_t n) { return Value::Number(n); }

TEST(FieldIdTest, InterningIsIdentity) {
  EXPECT_EQ(FieldId("pt"), kPt);
  EXPECT_NE(FieldId("sw"), kPt);
  EXPECT_EQ(FieldId("pt").index(), kPt.index());
  EXPECT_LT(kPt, kSw);
  EXPECT_THROW(FieldId(""), Error);
}

TEST(ValueTest, NumbersAndSymbols) {
  Value a = Value::Symbol("A");
  EXPECT_TRUE(a.is_symbol());
  EXPECT_EQ(a.symbol(), "A");
  EXPECT_EQ(a, Value::Symbol("A"));
  EXPECT_NE(a, Value::Symbol("B"));
  EXPECT_EQ(N(7).ToString(), "7");
  EXPECT_EQ(a.ToString(), "A");
  EXPECT_THROW(Value::Number(-1), Error);
}

TEST(DomainMapTest, DeclareAndQuery) {
  DomainMap d;
  d.Declare(kPt, {N(1), N(2), N(3)});
  EXPECT_TRUE(d.Contains(kPt));
  EXPECT_TRUE(d.InDomain(kPt, N(2)));
  EXPECT_FALSE(d.InDomain(kPt, N(4)));
  EXPECT_EQ(d.IndexOf(kPt, N(3)), 2u);
  EXPECT_EQ(d.PacketSpaceSize(), 3u);
  EXPECT_THROW(d.Values(kSw), Error);
  EXPECT_THROW(d.Declare(kSw, {}), Error);
  EXPECT_THROW(d.Declare(kSw, {N(1), N(1)}), Error);
  EXPECT_THROW(d.Declare(kPt, {N(9)}), Error);
}

TEST(PolicyOfPathTest, LeftAssociatedEmbedding) {
  Path p{{Token::Test(kPt, N(1)), Token::Mod(kPt, N(5))}};
  EXPECT_EQ(PolicyOfPath(p),
            Policy::Seq(Policy::Test(kPt, N(1)), Policy::Mod(kPt, N(5))));
  EXPECT_EQ(PolicyOfPath(Path{}), Policy::One());
  EXPECT_EQ(PolicyOfPath(Path{{Token::Zero()}}), Policy::Zero());
}

TEST(StructuralEqTest, UnionIsAcAndIdempotent) {
  Policy a = Policy::Mod(kPt, N(1));
  Policy b = Policy::Mod(kPt, N(2));
  EXPECT_TRUE(StructuralEq(Policy::Union(a, b), Policy::Union(b, a)));
  EXPECT_FALSE(StructuralEq(Policy::Seq(a, b), Policy::Seq(b, a)));
  EXPECT_TRUE(StructuralEq(Policy::Union(a, Policy::Union(a, b)),
                           Policy::Union(a, b)));
}

TEST(PolicySizeTest, CountsNodes) {
  EXPECT_EQ(PolicySize(Policy::One()), 1u);
  EXPECT_EQ(PolicySize(Policy::Seq(Policy::Test(kPt, N(1)),
                                   Policy::Mod(kPt, N(5)))),
            4u);
  EXPECT_EQ(PolicySize(Policy::Rep(Policy::One(), 6)), 2u);
}

TEST(PrinterTest, PrecedenceAndParentheses) {
  Policy p = Policy::Seq(
      Policy::Union(Policy::Mod(kPt, N(1)), Policy::Mod(kPt, N(2))),
      Policy::Mod(kSw, Value::Symbol("A")));
  EXPECT_EQ(ToString(p), "(pt <- 1 + pt <- 2) . sw <- A");
  EXPECT_EQ(ToString(Policy::Rep(Policy::Mod(kPt, N(1)), 3)), "(pt <- 1)^3");
  EXPECT_EQ(ToString(Predicate::Not(Predicate::Test(kPt, N(1)))), "~pt = 1");
}

TEST(TokenTest, Printing) {
  EXPECT_EQ(Token::Test(kPt, N(1)).ToString(), "pt=1");
  EXPECT_EQ(Token::Mod(kPt, N(5)).ToString(), "pt<-5");
  Path p{{Token::Test(kPt, N(1)), Token::Mod(kPt, N(5))}};
  EXPECT_EQ(p.ToString(), "pt=1 . pt<-5");
  EXPECT_EQ(Path{}.ToString(), "1");
}

TEST(SumOfPathsTest, InsertionIsIdempotent) {
  SumOfPaths s;
  Path p{{Token::Test(kPt, N(1))}};
  s.insert(p);
  SumOfPaths before = s;
  s.insert(p);
  EXPECT_EQ(s, before);
}

// Property: structural equality is an equivalence relation.
TEST(StructuralEqProperty, EquivalenceRelation) {
  testing::Rng rng(11);
  testing::RandomShape shape;
  for (int i = 0; i < 200; ++i) {
    DomainMap d = testing::RandomDomains(rng, shape);
    Policy p = testing::RandomPolicy(rng, d, shape);
    Policy q = testing::RandomPolicy(rng, d, shape);
    Policy r = testing::RandomPolicy(rng, d, shape);
    EXPECT_TRUE(StructuralEq(p, p));
    EXPECT_EQ(StructuralEq(p, q), StructuralEq(q, p));
    if (StructuralEq(p, q) && StructuralEq(q, r)) {
      EXPECT_TRUE(StructuralEq(p, r));
    }
    // A permuted union is equal to the original.
    EXPECT_TRUE(StructuralEq(Policy::Union(p, Policy::Union(q, r)),
                             Policy::Union(Policy::Union(r, p), q)));
  }
}

// Property: policy_of_path agrees with token-by-token application.
TEST(PolicyOfPathProperty, MatchesTokenwiseApplication) {
  testing::Rng rng(12);
  testing::RandomShape shape;
  for (int i = 0; i < 300; ++i) {
    DomainMap d = testing::RandomDomains(rng, shape);
    Path path = testing::RandomPath(rng, d, 8);
    bool has_zero = false;
    for (const Token& t : path.tokens) {
      has_zero |= t.kind == Token::Kind::kZero;
    }
    if (has_zero) continue;
    PacketSpace space(d);
    Packet pk = testing::RandomPacket(rng, d);
    std::optional<Packet> cur = pk;
    for (const Token& t : path.tokens) {
      if (!cur) break;
      if (t.is_test() && (*cur)[space.Position(t.field)] != t.value) {
        cur.reset();
      } else if (t.is_mod()) {
        (*cur)[space.Position(t.field)] = t.value;
      }
    }
    PacketSet expected;
    if (cur) expected.insert(*cur);
    EXPECT_EQ(Eval(PolicyOfPath(path), pk, d), expected) << path.ToString();
  }
}

}  // namespace
}  // namespace netkat
