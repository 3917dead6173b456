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
// File: parser.h
// -----------------------------------------------------------------------------
//
// Text front end. Policy syntax:
//
//   policy ::= seq ('+' seq)*
//   seq    ::= unary ('.' unary)*
//   unary  ::= '~' unary | atom ('^' NAT)*
//   atom   ::= '0' | '1' | FIELD '=' VALUE | FIELD '<-' VALUE
//            | NAME | '(' policy ')'
//   VALUE  ::= NAT | IDENT
//
// `~` only applies to predicates. NAME refers to an earlier `let` binding.
//
// Problem files are a sequence of sections, each starting on its own line:
//
//   # comment
//   domains:
//     pt: 1..6            # or: pt: 1, 2, 3, 4, 5, 6
//     sw: A, B
//   let p1 = pt = 1 . pt <- 5 + pt = 6 . pt <- 2
//   policy: p1
//   topology: pt = 5 . pt <- 6 + pt = 6 . pt <- 5 + pt = 1 + pt = 2
//   ingress: pt = 1
//   egress: pt = 3 + pt = 4
//   unfold: 6             # optional
//
// `domains` is resolved first, so sections may appear in any order; `let`
// bindings are resolved in file order.

#ifndef NETKAT_PARSER_H_
#define NETKAT_PARSER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netkat/terms.h"

namespace netkat {

struct SafetyProblem {
  Predicate ingress = Predicate::One();
  Policy switch_policy = Policy::Zero();
  Policy topology = Policy::Zero();
  Predicate egress = Predicate::Zero();
  DomainMap domains;
  std::optional<std::size_t> unfold_n;
};

using Bindings = std::map<std::string, Policy, std::less<>>;

// Parses a policy expression. Every field must be declared in `domains` and
// every value must belong to its field's domain.
//
// Throws `Error` with code kSyntaxError (with line/column), kUndeclaredField,
// kValueOutOfDomain, or kUnsupportedConstruct for `*` and `dup`.
Policy ParsePolicy(std::string_view text, const DomainMap& domains,
                   const Bindings& bindings = {});

// Parses an expression that must denote a predicate.
Predicate ParsePredicate(std::string_view text, const DomainMap& domains,
                         const Bindings& bindings = {});

// Parses and validates a problem file. Errors as `ParsePolicy`, plus
// kMissingSection when one of domains/policy/topology/ingress/egress is absent.
SafetyProblem ParseProblem(std::string_view contents);

// Renders a problem in the format `ParseProblem` accepts. `bindings` are
// emitted as `let` lines before the sections; `policy_name` / `topology_name`
// may name one of them instead of inlining the expression.
struct ProblemLayout {
  std::vector<std::pair<std::string, Policy>> bindings;
  std::optional<std::string> policy_name;
  std::optional<std::string> topology_name;
  std::vector<std::string> header_comments;
};
std::string FormatProblem(const SafetyProblem& problem,
                          const ProblemLayout& layout = {});

}  // namespace netkat

#endif  // NETKAT_PARSER_H_
