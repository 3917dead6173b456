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
// File: oracle.h
// -----------------------------------------------------------------------------
//
// Brute-force single-packet denotational semantics over finite domains. It
// shares no code with the rewrite engine and serves as its reference.
//
// Since the fragment has no `dup`, a history collapses to its head packet and
// every policy denotes a function Packet -> set of Packets. Applying a policy
// to a set of packets is the union of its per-packet results, so emptiness of
// a program on all packets is decided with one batched evaluation.

#ifndef NETKAT_ORACLE_H_
#define NETKAT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "netkat/parser.h"
#include "netkat/terms.h"

namespace netkat {

// Default enumeration cap on the packet space.
inline constexpr std::uint64_t kDefaultPacketCap = 10'000'000;

// A total assignment of values to the declared fields, positionally in
// `DomainMap::Fields()` order.
using Packet = std::vector<Value>;
using PacketSet = std::set<Packet>;

// Field layout of packets over a DomainMap.
class PacketSpace {
 public:
  explicit PacketSpace(const DomainMap& domains);

  const DomainMap& domains() const { return *domains_; }
  const std::vector<FieldId>& fields() const { return fields_; }
  // Throws `Error(kUndeclaredField)`.
  std::size_t Position(FieldId f) const;
  // Saturating product of the domain sizes.
  std::uint64_t size() const { return size_; }

  // The packet with mixed-radix index `index` (< size()).
  Packet Decode(std::uint64_t index) const;
  // Builds a packet from (field, value) pairs; unmentioned fields take the
  // first value of their domain.
  Packet Make(const std::vector<std::pair<FieldId, Value>>& assignment) const;
  // `{pt=1, sw=A}`.
  std::string ToString(const Packet& pk) const;

 private:
  const DomainMap* domains_;
  std::vector<FieldId> fields_;
  std::vector<std::size_t> radix_;
  std::uint64_t size_ = 1;
};

// Whether `pk` passes predicate `a`.
bool Holds(const Predicate& a, const Packet& pk, const PacketSpace& space);

// Denotation of `p` on one packet / on a set of packets.
PacketSet Eval(const Policy& p, const Packet& pk, const DomainMap& domains);
PacketSet EvalSet(const Policy& p, const PacketSet& in,
                  const PacketSpace& space);

// Least fixpoint of S -> {pk} u p(S).
PacketSet EvalStar(const Policy& p, const Packet& pk,
                   const DomainMap& domains);

// True iff `p` outputs nothing on every packet. Throws `Error(kDomainTooLarge)`
// when the packet space exceeds `cap`.
bool IsEmptyPolicy(const Policy& p, const DomainMap& domains,
                   std::uint64_t cap = kDefaultPacketCap);

// Some packet on which `p` outputs something (the smallest in enumeration
// order), or nullopt. Same cap as `IsEmptyPolicy`.
std::optional<Packet> FindWitness(const Policy& p, const DomainMap& domains,
                                  std::uint64_t cap = kDefaultPacketCap);

// Emptiness of in . (1 + p . t)^n . out on all packets.
bool IsEmptyProgram(const SafetyProblem& problem, std::size_t n,
                    std::uint64_t cap = kDefaultPacketCap);

// Emptiness of in . (p . t)* . out on all packets.
bool IsEmptyStarProgram(const SafetyProblem& problem,
                        std::uint64_t cap = kDefaultPacketCap);

// Largest, over packets passing `in`, of the least k with
// (1 + p.t)^k (pk) = (p . t)* (pk).
std::size_t SaturationDepth(const SafetyProblem& problem,
                            std::uint64_t cap = kDefaultPacketCap);

}  // namespace netkat

#endif  // NETKAT_ORACLE_H_
