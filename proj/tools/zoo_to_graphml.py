#!/usr/bin/env python3
# Copyright 2026 The NetKAT SafeCheck Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Converts node-link JSON topologies (as shipped by the `topohub` package for
the Internet Topology Zoo) into plain GraphML with node `id`s and undirected
`source`/`target` edges."""

import argparse
import json
import pathlib

import networkx as nx


def convert(src: pathlib.Path, dst_dir: pathlib.Path, max_nodes: int) -> bool:
    data = json.loads(src.read_text())
    g = nx.Graph()
    for node in data["nodes"]:
        g.add_node(str(node["id"]), label=str(node.get("name", node["id"])))
    for edge in data.get("edges", data.get("links", [])):
        g.add_edge(str(edge["source"]), str(edge["target"]))
    if g.number_of_nodes() == 0 or g.number_of_nodes() > max_nodes:
        return False
    nx.write_graphml(g, dst_dir / (src.stem + ".graphml"))
    return True


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("src_dir", type=pathlib.Path)
    parser.add_argument("dst_dir", type=pathlib.Path)
    parser.add_argument("--max-nodes", type=int, default=30)
    args = parser.parse_args()
    args.dst_dir.mkdir(parents=True, exist_ok=True)
    written = sum(
        convert(p, args.dst_dir, args.max_nodes)
        for p in sorted(args.src_dir.glob("*.json")))
    print(f"wrote {written} graphs")


if __name__ == "__main__":
    main()
