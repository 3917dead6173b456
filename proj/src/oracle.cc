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

#include "netkat/oracle.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "netkat/error.h"
#include "netkat/parallel.h"
#include "netkat/unfold.h"

namespace netkat {
namespace {

// Packets enumerated per batch.
constexpr std::uint64_t kBatch = 4096;

void CheckCap(const PacketSpace& space, std::uint64_t cap) {
  if (space.size() > cap) {
    throw Error(ErrorCode::kDomainTooLarge,
                "packet space of " + std::to_string(space.size()) +
                    " packets exceeds the enumeration cap of " +
                    std::to_string(cap));
  }
}

PacketSet DecodeRange(const PacketSpace& space, std::uint64_t begin,
                      std::uint64_t end) {
  PacketSet out;
  for (std::uint64_t i = begin; i < end; ++i) {
    out.insert(out.end(), space.Decode(i));
  }
  return out;
}

// The packets passing `a`, enumerated without materializing the full space.
PacketSet Filtered(const Predicate& a, const PacketSpace& space) {
  PacketSet out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Packet pk = space.Decode(i);
    if (Holds(a, pk, space)) out.insert(out.end(), std::move(pk));
  }
  return out;
}

}  // namespace

PacketSpace::PacketSpace(const DomainMap& domains)
    : domains_(&domains), fields_(domains.Fields()) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (FieldId f : fields_) {
    std::size_t r = domains.Values(f).size();
    radix_.push_back(r);
    size_ = size_ > kMax / r ? kMax : size_ * r;
  }
}

std::size_t PacketSpace::Position(FieldId f) const {
  auto it = std::lower_bound(fields_.begin(), fields_.end(), f);
  if (it == fields_.end() || *it != f) {
    throw Error(ErrorCode::kUndeclaredField,
                "field '" + std::string(f.name()) + "' has no declared domain");
  }
  return static_cast<std::size_t>(it - fields_.begin());
}

Packet PacketSpace::Decode(std::uint64_t index) const {
  Packet pk(fields_.size());
  for (std::size_t i = fields_.size(); i-- > 0;) {
    const auto& values = domains_->Values(fields_[i]);
    pk[i] = values[index % radix_[i]];
    index /= radix_[i];
  }
  return pk;
}

Packet PacketSpace::Make(
    const std::vector<std::pair<FieldId, Value>>& assignment) const {
  Packet pk = Decode(0);
  for (const auto& [f, v] : assignment) {
    if (!domains_->InDomain(f, v)) {
      throw Error(ErrorCode::kValueOutOfDomain,
                  "value " + v.ToString() + " is not in the domain of '" +
                      std::string(f.name()) + "'");
    }
    pk[Position(f)] = v;
  }
  return pk;
}

std::string PacketSpace::ToString(const Packet& pk) const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i > 0) out += ", ";
    out += fields_[i].name();
    out += "=";
    out += pk[i].ToString();
  }
  return out + "}";
}

bool Holds(const Predicate& a, const Packet& pk, const PacketSpace& space) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
      return true;
    case Predicate::Kind::kZero:
      return false;
    case Predicate::Kind::kTest:
      return pk[space.Position(a.field())] == a.value();
    case Predicate::Kind::kOr:
      return std::any_of(
          a.operands().begin(), a.operands().end(),
          [&](const Predicate& op) { return Holds(op, pk, space); });
    case Predicate::Kind::kAnd:
      return Holds(a.operands()[0], pk, space) &&
             Holds(a.operands()[1], pk, space);
    case Predicate::Kind::kNot:
      return !Holds(a.operands()[0], pk, space);
  }
  return false;
}

PacketSet EvalSet(const Policy& p, const PacketSet& in,
                  const PacketSpace& space) {
  if (in.empty()) return {};
  switch (p.kind()) {
    case Policy::Kind::kFilter: {
      PacketSet out;
      for (const Packet& pk : in) {
        if (Holds(p.predicate(), pk, space)) out.insert(out.end(), pk);
      }
      return out;
    }
    case Policy::Kind::kMod: {
      if (!space.domains().InDomain(p.field(), p.value())) {
        throw Error(ErrorCode::kValueOutOfDomain,
                    "value " + p.value().ToString() +
                        " is not in the domain of '" +
                        std::string(p.field().name()) + "'");
      }
      const std::size_t pos = space.Position(p.field());
      PacketSet out;
      for (Packet pk : in) {
        pk[pos] = p.value();
        out.insert(std::move(pk));
      }
      return out;
    }
    case Policy::Kind::kUnion: {
      PacketSet out;
      for (const Policy& op : p.operands()) out.merge(EvalSet(op, in, space));
      return out;
    }
    case Policy::Kind::kSeq:
      return EvalSet(p.operands()[1], EvalSet(p.operands()[0], in, space),
                     space);
    case Policy::Kind::kRep: {
      // Each step is a fixed function of its input set; stop once it repeats.
      PacketSet current = in;
      for (std::size_t k = 0; k < p.count(); ++k) {
        PacketSet next = EvalSet(p.operands()[0], current, space);
        if (next == current) break;
        current = std::move(next);
      }
      return current;
    }
  }
  return {};
}

PacketSet Eval(const Policy& p, const Packet& pk, const DomainMap& domains) {
  PacketSpace space(domains);
  return EvalSet(p, PacketSet{pk}, space);
}

PacketSet EvalStar(const Policy& p, const Packet& pk,
                   const DomainMap& domains) {
  PacketSpace space(domains);
  PacketSet reached{pk};
  PacketSet frontier{pk};
  while (!frontier.empty()) {
    PacketSet fresh;
    for (const Packet& q : EvalSet(p, frontier, space)) {
      if (!reached.contains(q)) fresh.insert(q);
    }
    reached.insert(fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return reached;
}

bool IsEmptyPolicy(const Policy& p, const DomainMap& domains,
                   std::uint64_t cap) {
  PacketSpace space(domains);
  CheckCap(space, cap);
  const std::uint64_t batches = (space.size() + kBatch - 1) / kBatch;
  std::atomic<bool> empty = true;
  ParallelFor(static_cast<std::size_t>(batches), 0,
              [&](std::size_t, std::size_t begin, std::size_t end) {
                for (std::size_t b = begin; b < end && empty; ++b) {
                  PacketSet in = DecodeRange(
                      space, b * kBatch,
                      std::min<std::uint64_t>(space.size(), (b + 1) * kBatch));
                  if (!EvalSet(p, in, space).empty()) empty = false;
                }
              });
  return empty;
}

std::optional<Packet> FindWitness(const Policy& p, const DomainMap& domains,
                                  std::uint64_t cap) {
  PacketSpace space(domains);
  CheckCap(space, cap);
  for (std::uint64_t b = 0; b * kBatch < space.size(); ++b) {
    const std::uint64_t end =
        std::min<std::uint64_t>(space.size(), (b + 1) * kBatch);
    if (EvalSet(p, DecodeRange(space, b * kBatch, end), space).empty()) {
      continue;
    }
    for (std::uint64_t i = b * kBatch; i < end; ++i) {
      Packet pk = space.Decode(i);
      if (!EvalSet(p, PacketSet{pk}, space).empty()) return pk;
    }
  }
  return std::nullopt;
}

bool IsEmptyProgram(const SafetyProblem& problem, std::size_t n,
                    std::uint64_t cap) {
  return IsEmptyPolicy(BuildProgram(problem, n), problem.domains, cap);
}

bool IsEmptyStarProgram(const SafetyProblem& problem, std::uint64_t cap) {
  PacketSpace space(problem.domains);
  CheckCap(space, cap);
  const Policy step = Policy::Seq(problem.switch_policy, problem.topology);
  PacketSet reached = Filtered(problem.ingress, space);
  PacketSet frontier = reached;
  while (!frontier.empty()) {
    PacketSet fresh;
    for (const Packet& q : EvalSet(step, frontier, space)) {
      if (!reached.contains(q)) fresh.insert(q);
    }
    reached.insert(fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return std::none_of(reached.begin(), reached.end(), [&](const Packet& q) {
    return Holds(problem.egress, q, space);
  });
}

std::size_t SaturationDepth(const SafetyProblem& problem, std::uint64_t cap) {
  PacketSpace space(problem.domains);
  CheckCap(space, cap);
  const Policy step = Policy::Seq(problem.switch_policy, problem.topology);
  std::size_t depth = 0;
  for (const Packet& pk : Filtered(problem.ingress, space)) {
    PacketSet reached{pk};
    PacketSet frontier{pk};
    std::size_t k = 0;
    while (true) {
      PacketSet fresh;
      for (const Packet& q : EvalSet(step, frontier, space)) {
        if (!reached.contains(q)) fresh.insert(q);
      }
      if (fresh.empty()) break;
      ++k;
      reached.insert(fresh.begin(), fresh.end());
      frontier = std::move(fresh);
    }
    depth = std::max(depth, k);
  }
  return depth;
}

}  // namespace netkat
