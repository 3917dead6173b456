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

#include "netkat/topology.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "netkat/error.h"

namespace netkat {
namespace {

namespace pt = boost::property_tree;

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

bool AllDigits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string Trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Identifier usable as a symbolic value.
std::string Sanitize(std::string_view id) {
  std::string out;
  for (unsigned char c : id) {
    out += (std::isalnum(c) != 0 || c == '_') ? static_cast<char>(c) : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) != 0) {
    out = "n" + out;
  }
  return out;
}

std::int64_t ParsePort(const std::string& text) {
  std::string t = Trim(text);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
    throw Error(ErrorCode::kParseError, "invalid port number '" + text + "'");
  }
  return v;
}

struct RawEdge {
  std::string source;
  std::string target;
  bool directed;
  std::optional<std::int64_t> source_port;
  std::optional<std::int64_t> target_port;
};

// Shortest-path distances to `target` along directed switch links.
std::vector<std::size_t> DistancesTo(
    std::size_t target, const std::vector<std::vector<std::size_t>>& in_adj) {
  std::vector<std::size_t> dist(in_adj.size(), kUnreachable);
  std::deque<std::size_t> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : in_adj[v]) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

bool NaturalLess(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::optional<std::size_t> TopologyGraph::Find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> TopologyGraph::Switches() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].host) out.push_back(i);
  }
  return out;
}

std::vector<DirectedLink> TopologyGraph::InternalLinks() const {
  std::vector<DirectedLink> out;
  for (const DirectedLink& l : links) {
    if (!nodes[l.from].host && !nodes[l.to].host) out.push_back(l);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> TopologyGraph::HostPorts()
    const {
  std::set<std::pair<std::size_t, std::int64_t>> out;
  for (const DirectedLink& l : links) {
    if (!nodes[l.from].host && nodes[l.to].host) {
      out.emplace(l.from, l.from_port);
    } else if (nodes[l.from].host && !nodes[l.to].host) {
      out.emplace(l.to, l.to_port);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<std::int64_t> TopologyGraph::PortOf(std::size_t from,
                                                  std::size_t to) const {
  for (const DirectedLink& l : links) {
    if (l.from == from && l.to == to) return l.from_port;
  }
  return std::nullopt;
}

TopologyGraph LoadGraphml(std::string_view contents) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(contents)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed GraphML: ") + e.what());
  }
  auto root = tree.get_child_optional("graphml");
  if (!root) throw Error(ErrorCode::kParseError, "missing <graphml> element");
  auto graph = root->get_child_optional("graph");
  if (!graph) throw Error(ErrorCode::kParseError, "missing <graph> element");

  // key id -> attribute name
  std::map<std::string, std::string> key_names;
  for (const auto& [tag, child] : *root) {
    if (tag != "key") continue;
    std::string id = child.get<std::string>("<xmlattr>.id", "");
    // `attr.name` contains the default path separator.
    key_names[id] = child.get<std::string>(
        boost::property_tree::ptree::path_type("<xmlattr>/attr.name", '/'), id);
  }
  auto attr_name = [&](const std::string& key) {
    auto it = key_names.find(key);
    return it == key_names.end() ? key : it->second;
  };

  const bool default_directed =
      Lower(graph->get<std::string>("<xmlattr>.edgedefault", "undirected")) ==
      "directed";

  std::map<std::string, bool, std::less<>> node_host;
  std::vector<RawEdge> edges;
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      auto id = child.get_optional<std::string>("<xmlattr>.id");
      if (!id || id->empty()) {
        throw Error(ErrorCode::kParseError, "node without an id");
      }
      bool host = false;
      for (const auto& [dtag, data] : child) {
        if (dtag != "data") continue;
        std::string name = Lower(attr_name(data.get<std::string>("<xmlattr>.key", "")));
        if ((name == "kind" || name == "type") &&
            Lower(Trim(data.get_value<std::string>())) == "host") {
          host = true;
        }
      }
      node_host[*id] = host;
    } else if (tag == "edge") {
      RawEdge e;
      auto src = child.get_optional<std::string>("<xmlattr>.source");
      auto dst = child.get_optional<std::string>("<xmlattr>.target");
      if (!src || !dst) {
        throw Error(ErrorCode::kParseError, "edge without source or target");
      }
      e.source = *src;
      e.target = *dst;
      auto directed = child.get_optional<std::string>("<xmlattr>.directed");
      e.directed = directed ? Lower(*directed) == "true" : default_directed;
      for (const auto& [dtag, data] : child) {
        if (dtag != "data") continue;
        std::string name = Lower(attr_name(data.get<std::string>("<xmlattr>.key", "")));
        if (name == "source_port") {
          e.source_port = ParsePort(data.get_value<std::string>());
        } else if (name == "target_port") {
          e.target_port = ParsePort(data.get_value<std::string>());
        }
      }
      edges.push_back(std::move(e));
    }
  }

  TopologyGraph g;
  for (const auto& [id, host] : node_host) {
    g.nodes.push_back({id, Value(), host});
  }
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const TopologyNode& a, const TopologyNode& b) {
              return NaturalLess(a.id, b.id);
            });
  std::set<std::string> symbols;
  std::set<std::int64_t> numbers;
  for (TopologyNode& n : g.nodes) {
    if (AllDigits(n.id) && n.id.size() <= 18 &&
        numbers.insert(std::stoll(n.id)).second) {
      n.value = Value::Number(std::stoll(n.id));
      continue;
    }
    std::string base = Sanitize(n.id), name = base;
    for (int k = 2; !symbols.insert(name).second; ++k) {
      name = base + "_" + std::to_string(k);
    }
    n.value = Value::Symbol(name);
  }
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].id] = i;
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorCode::kParseError,
                  "edge refers to unknown node '" + id + "'");
    }
    return it->second;
  };

  // Per (node, neighbor): the port used to send toward / receive from the
  // neighbor. An undirected edge end sets both; a directed edge sets the
  // source's out port and the target's in port. A physical port (node, port)
  // faces exactly one neighbor.
  using End = std::pair<std::size_t, std::size_t>;
  std::map<End, std::int64_t> out_port, in_port;
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> owner;
  auto claim = [&](std::map<End, std::int64_t>& side, std::size_t node,
                   std::size_t neighbor, std::int64_t p) {
    auto [it, fresh] = owner.emplace(std::make_pair(node, p), neighbor);
    if (!fresh && it->second != neighbor) {
      throw Error(ErrorCode::kParseError,
                  "port " + std::to_string(p) + " of node '" +
                      g.nodes[node].id + "' is used for two neighbors");
    }
    auto [pit, pfresh] = side.emplace(End{node, neighbor}, p);
    if (!pfresh && pit->second != p) {
      throw Error(ErrorCode::kParseError,
                  "node '" + g.nodes[node].id + "' has two ports toward '" +
                      g.nodes[neighbor].id + "'");
    }
  };

  struct Resolved {
    std::size_t s, t;
    bool directed;
  };
  std::vector<Resolved> resolved;
  std::vector<std::set<std::size_t>> neighbors(g.nodes.size());
  for (const RawEdge& e : edges) {
    std::size_t s = lookup(e.source), t = lookup(e.target);
    if (s == t) continue;
    if (e.source_port) {
      claim(out_port, s, t, *e.source_port);
      if (!e.directed) claim(in_port, s, t, *e.source_port);
    }
    if (e.target_port) {
      claim(in_port, t, s, *e.target_port);
      if (!e.directed) claim(out_port, t, s, *e.target_port);
    }
    neighbors[s].insert(t);
    neighbors[t].insert(s);
    resolved.push_back({s, t, e.directed});
  }
  // A missing side reuses the other side's port, else the smallest free one.
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    std::int64_t next = 1;
    for (std::size_t u : neighbors[v]) {
      auto out = out_port.find({v, u});
      auto in = in_port.find({v, u});
      if (out != out_port.end() && in != in_port.end()) continue;
      std::int64_t p;
      if (out != out_port.end()) {
        p = out->second;
      } else if (in != in_port.end()) {
        p = in->second;
      } else {
        while (owner.contains({v, next})) ++next;
        p = next;
      }
      if (out == out_port.end()) claim(out_port, v, u, p);
      if (in == in_port.end()) claim(in_port, v, u, p);
    }
  }
  std::set<DirectedLink> links;
  for (const Resolved& r : resolved) {
    links.insert({r.s, r.t, out_port.at({r.s, r.t}), in_port.at({r.t, r.s})});
    if (!r.directed) {
      links.insert(
          {r.t, r.s, out_port.at({r.t, r.s}), in_port.at({r.s, r.t})});
    }
  }
  g.links.assign(links.begin(), links.end());
  return g;
}

TopologyGraph LoadGraphmlFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadGraphml(buf.str());
}

Policy EncodeTopology(const TopologyGraph& g, TopologyEncoding encoding) {
  const FieldId sw("sw");
  const FieldId ptf("pt");
  const bool with_sw = encoding == TopologyEncoding::kSwitchAndPort;
  std::vector<Policy> summands;
  for (const DirectedLink& l : g.InternalLinks()) {
    Policy guard = Policy::Test(ptf, Value::Number(l.from_port));
    Policy move = Policy::Mod(ptf, Value::Number(l.to_port));
    if (with_sw) {
      guard = Policy::Seq(Policy::Test(sw, g.nodes[l.from].value), guard);
      move = Policy::Seq(Policy::Mod(sw, g.nodes[l.to].value), move);
    }
    summands.push_back(Policy::Seq(guard, move));
  }
  for (const auto& [node, p] : g.HostPorts()) {
    Policy filter = Policy::Test(ptf, Value::Number(p));
    if (with_sw) {
      filter = Policy::Seq(Policy::Test(sw, g.nodes[node].value), filter);
    }
    summands.push_back(filter);
  }
  return Policy::Union(std::move(summands));
}

Policy GenShortestPathPolicy(const TopologyGraph& g) {
  const FieldId sw("sw");
  const FieldId dst("dst");
  const FieldId ptf("pt");
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> out_adj(n), in_adj(n);
  for (const DirectedLink& l : g.InternalLinks()) {
    out_adj[l.from].push_back(l.to);
    in_adj[l.to].push_back(l.from);
  }
  std::vector<Policy> summands;
  for (std::size_t d : g.Switches()) {
    std::vector<std::size_t> dist = DistancesTo(d, in_adj);
    for (std::size_t s : g.Switches()) {
      if (s == d || dist[s] == kUnreachable) continue;
      // out_adj is in link order, i.e. ascending neighbor index.
      for (std::size_t v : out_adj[s]) {
        if (dist[v] + 1 == dist[s]) {
          summands.push_back(Policy::Seq(
              Policy::Seq(Policy::Test(sw, g.nodes[s].value),
                          Policy::Test(dst, g.nodes[d].value)),
              Policy::Mod(ptf, Value::Number(*g.PortOf(s, v)))));
          break;
        }
      }
    }
  }
  return Policy::Union(std::move(summands));
}

std::pair<std::size_t, std::size_t> LongestPathEndpoints(
    const TopologyGraph& g) {
  const std::vector<std::size_t> switches = g.Switches();
  if (switches.empty()) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no switches");
  }
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> in_adj(n), undirected(n);
  for (const DirectedLink& l : g.InternalLinks()) {
    in_adj[l.to].push_back(l.from);
    undirected[l.from].push_back(l.to);
    undirected[l.to].push_back(l.from);
  }
  // Weakly connected components; the largest wins, ties to the one holding
  // the smallest node.
  std::vector<std::size_t> comp(n, kUnreachable);
  std::vector<std::size_t> sizes;
  for (std::size_t s : switches) {
    if (comp[s] != kUnreachable) continue;
    const std::size_t c = sizes.size();
    sizes.push_back(0);
    std::deque<std::size_t> queue{s};
    comp[s] = c;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      ++sizes[c];
      for (std::size_t u : undirected[v]) {
        if (comp[u] == kUnreachable) {
          comp[u] = c;
          queue.push_back(u);
        }
      }
    }
  }
  const std::size_t best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::pair<std::size_t, std::size_t> result{kUnreachable, kUnreachable};
  std::size_t longest = 0;
  for (std::size_t d : switches) {
    if (comp[d] != best) continue;
    std::vector<std::size_t> dist = DistancesTo(d, in_adj);
    for (std::size_t s : switches) {
      if (comp[s] != best || s == d || dist[s] == kUnreachable) continue;
      std::pair<std::size_t, std::size_t> cand{s, d};
      if (dist[s] > longest || (dist[s] == longest && cand < result)) {
        longest = dist[s];
        result = cand;
      }
    }
  }
  if (result.first == kUnreachable) {
    // Singleton component.
    for (std::size_t s : switches) {
      if (comp[s] == best) return {s, s};
    }
  }
  return result;
}

std::size_t DefaultUnfoldBound(const TopologyGraph& g) {
  return g.InternalLinks().size() + g.HostPorts().size();
}

DomainMap TopologyDomains(const TopologyGraph& g) {
  DomainMap domains;
  std::vector<Value> switches;
  for (std::size_t s : g.Switches()) switches.push_back(g.nodes[s].value);
  std::set<std::int64_t> ports;
  for (const DirectedLink& l : g.links) {
    ports.insert(l.from_port);
    ports.insert(l.to_port);
  }
  if (ports.empty()) ports.insert(1);
  std::vector<Value> port_values;
  for (std::int64_t p : ports) port_values.push_back(Value::Number(p));
  if (!switches.empty()) {
    domains.Declare(FieldId("sw"), switches);
    domains.Declare(FieldId("dst"), switches);
  }
  domains.Declare(FieldId("pt"), port_values);
  return domains;
}

SafetyProblem MakeBenchmarkProblem(const TopologyGraph& g,
                                   std::optional<std::string> src,
                                   std::optional<std::string> dst) {
  auto [s, d] = LongestPathEndpoints(g);
  auto resolve = [&](const std::optional<std::string>& id, std::size_t dflt) {
    if (!id) return dflt;
    std::optional<std::size_t> i = g.Find(*id);
    if (!i || g.nodes[*i].host) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + *id + "' is not a switch of the graph");
    }
    return *i;
  };
  s = resolve(src, s);
  d = resolve(dst, d);
  SafetyProblem problem;
  problem.domains = TopologyDomains(g);
  problem.switch_policy = GenShortestPathPolicy(g);
  problem.topology = EncodeTopology(g);
  problem.ingress = Predicate::Test(FieldId("sw"), g.nodes[s].value);
  problem.egress = Predicate::Test(FieldId("sw"), g.nodes[d].value);
  problem.unfold_n = DefaultUnfoldBound(g);
  return problem;
}

}  // namespace netkat
