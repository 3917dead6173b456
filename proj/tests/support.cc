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

#include "support.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace netkat::testing {
namespace {

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& v) {
  return v[Uniform(rng, 0, v.size() - 1)];
}

std::pair<FieldId, Value> RandomAssignment(Rng& rng, const DomainMap& domains) {
  FieldId f = Pick(rng, domains.Fields());
  return {f, Pick(rng, domains.Values(f))};
}

Policy GenPolicy(Rng& rng, const DomainMap& domains, std::size_t budget,
                 const RandomShape& shape) {
  if (budget <= 2) {
    auto [f, v] = RandomAssignment(rng, domains);
    switch (Uniform(rng, 0, 5)) {
      case 0:
      case 1:
        return Policy::Test(f, v);
      case 2:
        return Chance(rng, 0.5) ? Policy::One() : Policy::Zero();
      default:
        return Policy::Mod(f, v);
    }
  }
  const std::size_t left = Uniform(rng, 1, budget - 2);
  switch (Uniform(rng, 0, shape.repetition ? 5 : 4)) {
    case 0:
      return Policy::Filter(
          RandomPredicate(rng, domains, budget - 1, shape.negation));
    case 1:
    case 2:
      return Policy::Union(GenPolicy(rng, domains, left, shape),
                           GenPolicy(rng, domains, budget - 1 - left, shape));
    case 3:
    case 4:
      return Policy::Seq(GenPolicy(rng, domains, left, shape),
                         GenPolicy(rng, domains, budget - 1 - left, shape));
    default:
      return Policy::Rep(GenPolicy(rng, domains, budget - 1, shape),
                         Uniform(rng, 0, 2));
  }
}

}  // namespace

std::string DataPath(const std::string& name) {
  return std::string(NETKAT_TEST_DATA_DIR) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SafetyProblem LoadProblem(const std::string& name) {
  return ParseProblem(ReadFile(DataPath(name)));
}

DomainMap RandomDomains(Rng& rng, const RandomShape& shape) {
  static const char* kNames[] = {"a", "b", "c", "d", "e"};
  DomainMap domains;
  const std::size_t fields = Uniform(rng, 1, shape.max_fields);
  for (std::size_t i = 0; i < fields; ++i) {
    std::vector<Value> values;
    const std::size_t k = Uniform(rng, 1, shape.max_domain);
    for (std::size_t v = 0; v < k; ++v) {
      values.push_back(Value::Number(static_cast<std::int64_t>(v)));
    }
    domains.Declare(FieldId(kNames[i]), values);
  }
  return domains;
}

Predicate RandomPredicate(Rng& rng, const DomainMap& domains,
                          std::size_t budget, bool negation) {
  if (budget <= 2) {
    switch (Uniform(rng, 0, 7)) {
      case 0:
        return Predicate::One();
      case 1:
        return Predicate::Zero();
      default: {
        auto [f, v] = RandomAssignment(rng, domains);
        return Predicate::Test(f, v);
      }
    }
  }
  const std::size_t left = Uniform(rng, 1, budget - 2);
  switch (Uniform(rng, 0, negation ? 4 : 3)) {
    case 0:
    case 1:
      return Predicate::Or(
          RandomPredicate(rng, domains, left, negation),
          RandomPredicate(rng, domains, budget - 1 - left, negation));
    case 2:
    case 3:
      return Predicate::And(
          RandomPredicate(rng, domains, left, negation),
          RandomPredicate(rng, domains, budget - 1 - left, negation));
    default:
      return Predicate::Not(
          RandomPredicate(rng, domains, budget - 1, negation));
  }
}

Policy RandomPolicy(Rng& rng, const DomainMap& domains,
                    const RandomShape& shape) {
  while (true) {
    Policy p =
        GenPolicy(rng, domains, Uniform(rng, 1, shape.max_size), shape);
    if (PolicySize(p) <= shape.max_size) return p;
  }
}

Path RandomPath(Rng& rng, const DomainMap& domains, std::size_t max_len) {
  Path p;
  const std::size_t len = Uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) {
    auto [f, v] = RandomAssignment(rng, domains);
    const std::size_t roll = Uniform(rng, 0, 39);
    if (roll == 0) {
      p.tokens.push_back(Token::Zero());
    } else if (roll <= 3) {
      p.tokens.push_back(Token::One());
    } else if (roll <= 22) {
      p.tokens.push_back(Token::Test(f, v));
    } else {
      p.tokens.push_back(Token::Mod(f, v));
    }
  }
  return p;
}

std::vector<Value> RandomPacket(Rng& rng, const DomainMap& domains) {
  std::vector<Value> pk;
  for (FieldId f : domains.Fields()) pk.push_back(Pick(rng, domains.Values(f)));
  return pk;
}

SafetyProblem RandomProblem(Rng& rng, const RandomShape& shape) {
  SafetyProblem problem;
  problem.domains = RandomDomains(rng, shape);
  // The switch policy and topology share the size budget.
  RandomShape half = shape;
  half.max_size = std::max<std::size_t>(1, shape.max_size / 2);
  problem.switch_policy = RandomPolicy(rng, problem.domains, half);
  problem.topology = RandomPolicy(rng, problem.domains, half);
  problem.ingress = RandomPredicate(rng, problem.domains, 4, shape.negation);
  problem.egress = RandomPredicate(rng, problem.domains, 4, shape.negation);
  return problem;
}

std::string GraphmlOf(
    const std::vector<std::string>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::string out =
      "<?xml version=\"1.0\"?>\n<graphml>\n"
      "  <key id=\"k\" for=\"node\" attr.name=\"kind\" "
      "attr.type=\"string\"/>\n  <graph edgedefault=\"undirected\">\n";
  for (const std::string& n : nodes) {
    out += "    <node id=\"" + n + "\"";
    if (n.rfind("h", 0) == 0) {
      out += "><data key=\"k\">host</data></node>\n";
    } else {
      out += "/>\n";
    }
  }
  for (const auto& [s, t] : edges) {
    out += "    <edge source=\"" + s + "\" target=\"" + t + "\"/>\n";
  }
  return out + "  </graph>\n</graphml>\n";
}

TopologyGraph RandomGraph(Rng& rng, std::size_t n) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("s" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(nodes[Uniform(rng, 0, i - 1)], nodes[i]);
  }
  const std::size_t extra = n >= 3 ? Uniform(rng, 0, n / 2) : 0;
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t a = Uniform(rng, 0, n - 1), b = Uniform(rng, 0, n - 1);
    if (a != b) edges.emplace_back(nodes[a], nodes[b]);
  }
  return LoadGraphml(GraphmlOf(nodes, edges));
}

SafetyProblem RandomNetwork(Rng& rng, std::size_t max_switches) {
  const std::size_t n = Uniform(rng, 2, max_switches);
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("s" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(nodes[Uniform(rng, 0, i - 1)], nodes[i]);
  }
  if (n >= 3 && Chance(rng, 0.5)) {
    std::size_t a = Uniform(rng, 0, n - 1), b = Uniform(rng, 0, n - 1);
    if (a != b) edges.emplace_back(nodes[a], nodes[b]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (Chance(rng, 0.4)) {
      nodes.push_back("h" + std::to_string(i));
      edges.emplace_back(nodes[i], nodes.back());
    }
  }
  TopologyGraph g = LoadGraphml(GraphmlOf(nodes, edges));

  SafetyProblem problem;
  problem.domains = TopologyDomains(g);
  const FieldId tag("tag");
  problem.domains.Declare(tag, {Value::Number(0), Value::Number(1)});
  const FieldId sw("sw"), ptf("pt");

  std::vector<Policy> summands;
  Policy routes = GenShortestPathPolicy(g);
  std::vector<Policy> base;
  if (routes.kind() == Policy::Kind::kUnion) {
    base.assign(routes.operands().begin(), routes.operands().end());
  } else {
    base.push_back(routes);
  }
  for (const Policy& s : base) {
    if (Chance(rng, 0.15)) continue;  // dropped route
    if (Chance(rng, 0.2)) {
      summands.push_back(
          Policy::Seq(Policy::Test(tag, Value::Number(Uniform(rng, 0, 1))), s));
    } else if (Chance(rng, 0.2)) {
      summands.push_back(
          Policy::Seq(s, Policy::Mod(tag, Value::Number(Uniform(rng, 0, 1)))));
    } else {
      summands.push_back(s);
    }
  }
  const std::vector<Value>& ports = problem.domains.Values(ptf);
  const std::vector<Value>& switches = problem.domains.Values(sw);
  const std::size_t extra = Uniform(rng, 0, 2);
  for (std::size_t k = 0; k < extra; ++k) {
    summands.push_back(Policy::Seq(Policy::Test(sw, Pick(rng, switches)),
                                   Policy::Mod(ptf, Pick(rng, ports))));
  }
  problem.switch_policy = Policy::Union(std::move(summands));
  problem.topology = EncodeTopology(g);

  Predicate in = Predicate::Test(sw, Pick(rng, switches));
  if (Chance(rng, 0.5)) in = Predicate::And(in, Predicate::Test(tag, Value::Number(0)));
  Predicate out = Predicate::Test(sw, Pick(rng, switches));
  if (Chance(rng, 0.3)) {
    out = Predicate::And(out, Predicate::Test(ptf, Pick(rng, ports)));
  }
  if (Chance(rng, 0.3)) {
    out = Predicate::And(out, Predicate::Test(tag, Value::Number(1)));
  }
  problem.ingress = in;
  problem.egress = out;
  return problem;
}

}  // namespace netkat::testing
