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
// File: topology.h
// -----------------------------------------------------------------------------
//
// GraphML ingestion, topology encoding, destination-based shortest-path
// policy generation and benchmark endpoint selection.
//
// GraphML conventions:
//   * node `id`; a node whose `kind` or `type` data is `host` is a host, every
//     other node is a switch;
//   * edge `source`/`target`, optional integer `source_port`/`target_port`
//     data;
//   * edges are undirected unless `directed="true"` or the graph has
//     `edgedefault="directed"`. An undirected edge yields two directed links
//     sharing one port at each end.
// A port number names one neighbor per node. Missing ports are assigned per
// node, walking neighbors in natural id order, as the smallest unused positive
// integer. Parallel edges and self-loops are ignored.

#ifndef NETKAT_TOPOLOGY_H_
#define NETKAT_TOPOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netkat/parser.h"
#include "netkat/terms.h"

namespace netkat {

struct TopologyNode {
  std::string id;
  // `sw`/`dst` value: the number for all-digit ids, else a symbol.
  Value value;
  bool host = false;
};

struct DirectedLink {
  std::size_t from;
  std::size_t to;
  std::int64_t from_port;
  std::int64_t to_port;
  friend auto operator<=>(const DirectedLink&, const DirectedLink&) = default;
};

struct TopologyGraph {
  // Sorted by natural id order; indices below refer to this vector.
  std::vector<TopologyNode> nodes;
  // Sorted, duplicate-free.
  std::vector<DirectedLink> links;

  // Index of the node with id `id`, if any.
  std::optional<std::size_t> Find(std::string_view id) const;
  std::vector<std::size_t> Switches() const;
  // Directed links between two switches.
  std::vector<DirectedLink> InternalLinks() const;
  // (switch, port) pairs facing a host.
  std::vector<std::pair<std::size_t, std::int64_t>> HostPorts() const;
  // Port of `from` toward `to`, if linked.
  std::optional<std::int64_t> PortOf(std::size_t from, std::size_t to) const;
};

// Natural order: digit runs compare numerically.
bool NaturalLess(std::string_view a, std::string_view b);

// Throws `Error(kParseError)` on malformed XML, a missing graph, an edge to
// an unknown node, a non-integer port or a port used for two neighbors.
TopologyGraph LoadGraphml(std::string_view contents);
// Throws `Error(kIo)` if the file cannot be read.
TopologyGraph LoadGraphmlFile(const std::string& path);

enum class TopologyEncoding {
  // sw=A . pt=x . sw<-B . pt<-y per link, sw=A . pt=k per host port.
  kSwitchAndPort,
  // pt=x . pt<-y per link, pt=k per host port; for networks whose port
  // labels are unique across switches.
  kPortOnly,
};

// Sum of per-link summands plus perimeter filters; 0 for an empty graph.
Policy EncodeTopology(const TopologyGraph& g,
                      TopologyEncoding encoding = TopologyEncoding::kSwitchAndPort);

// For every ordered pair of distinct switches (S, D) with D reachable from S:
// sw=S . dst=D . pt<-p, where p is S's port toward its smallest-id neighbor
// on a shortest path to D.
Policy GenShortestPathPolicy(const TopologyGraph& g);

// Endpoints of a longest shortest path among the switches of the largest
// weakly connected component, ties to the smallest (src, dst) in natural
// order. Throws `Error(kEmptyGraph)` when there is no switch.
std::pair<std::size_t, std::size_t> LongestPathEndpoints(const TopologyGraph& g);

// Directed switch-to-switch links plus host-facing ports.
std::size_t DefaultUnfoldBound(const TopologyGraph& g);

// Domains `sw`, `dst` (switch values) and `pt` (used ports) for `g`.
DomainMap TopologyDomains(const TopologyGraph& g);

// Switch-to-switch reachability problem over `g` with the shortest-path
// policy: ingress sw=src, egress sw=dst, bound DefaultUnfoldBound(g).
// Endpoints default to LongestPathEndpoints. Throws `Error(kEmptyGraph)`, or
// `Error(kInvalidArgument)` when an endpoint id is not a switch.
SafetyProblem MakeBenchmarkProblem(
    const TopologyGraph& g, std::optional<std::string> src = std::nullopt,
    std::optional<std::string> dst = std::nullopt);

}  // namespace netkat

#endif  // NETKAT_TOPOLOGY_H_
