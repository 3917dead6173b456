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
// Shared helpers for tests and the acceptance runner: fixture loading and
// seeded random generators for domains, predicates, policies, problems and
// small networks.

#ifndef NETKAT_TESTS_SUPPORT_H_
#define NETKAT_TESTS_SUPPORT_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "netkat/parser.h"
#include "netkat/terms.h"
#include "netkat/topology.h"

namespace netkat::testing {

using Rng = std::mt19937_64;

// Absolute path of `name` under tests/data.
std::string DataPath(const std::string& name);
std::string ReadFile(const std::string& path);
SafetyProblem LoadProblem(const std::string& name);

struct RandomShape {
  std::size_t max_fields = 3;
  std::size_t max_domain = 4;
  // Upper bound on PolicySize of generated policies.
  std::size_t max_size = 25;
  bool negation = true;
  bool repetition = false;
};

// Fields `a`, `b`, `c` (as many as drawn) over values 0..k-1.
DomainMap RandomDomains(Rng& rng, const RandomShape& shape);
Predicate RandomPredicate(Rng& rng, const DomainMap& domains,
                          std::size_t budget, bool negation);
// A policy with PolicySize <= shape.max_size.
Policy RandomPolicy(Rng& rng, const DomainMap& domains,
                    const RandomShape& shape);
// A random path of tests, mods, 1 and (rarely) 0 tokens.
Path RandomPath(Rng& rng, const DomainMap& domains, std::size_t max_len);
// Uniformly drawn packet.
std::vector<Value> RandomPacket(Rng& rng, const DomainMap& domains);

// Random problem: random domains, switch policy, topology, ingress, egress.
SafetyProblem RandomProblem(Rng& rng, const RandomShape& shape);

// Random connected network of 2..max_switches switches with hosts on some
// ports, its shortest-path policy perturbed by a random extra field `tag`,
// and random switch/host endpoints.
SafetyProblem RandomNetwork(Rng& rng, std::size_t max_switches);

// Random connected undirected graph of `n` switches named s0..s{n-1}.
TopologyGraph RandomGraph(Rng& rng, std::size_t n);

// GraphML text for an undirected graph over the given switch ids.
std::string GraphmlOf(const std::vector<std::string>& nodes,
                      const std::vector<std::pair<std::string, std::string>>&
                          edges);

}  // namespace netkat::testing

#endif  // NETKAT_TESTS_SUPPORT_H_
