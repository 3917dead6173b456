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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace netkat::tools;
  CLI::App app{"In-out safety checking and failure explanation for NetKAT "
               "programs"};
  app.require_subcommand(1);

  ExplainCommand explain;
  bool no_minimize = false;
  std::string field_order;
  auto* explain_cmd =
      app.add_subcommand("explain", "Decide safety and print minimal "
                                    "failure explanations");
  explain_cmd->add_option("problem", explain.problem_file, "Problem file")
      ->required();
  explain_cmd->add_option("--unfold", explain.unfold, "Unfolding bound n");
  explain_cmd->add_flag("--no-minimize", no_minimize,
                        "Report every canonical path");
  explain_cmd->add_option("--format", explain.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  explain_cmd->add_option("--field-order", field_order,
                          "Comma-separated field order for canonical paths");
  explain_cmd->add_flag("--stats", explain.stats, "Include statistics");

  OracleCheckCommand oracle;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare rewriting against brute-force semantics");
  oracle_cmd->add_option("problem", oracle.problem_file, "Problem file")
      ->required();
  oracle_cmd->add_option("--unfold", oracle.unfold, "Unfolding bound n");
  oracle_cmd->add_option("--cap", oracle.cap, "Packet enumeration cap");

  EncodeCommand encode;
  auto* encode_cmd = app.add_subcommand(
      "encode", "Turn a GraphML topology into a problem file");
  encode_cmd->add_option("graphml", encode.graphml_file, "GraphML file")
      ->required();
  encode_cmd->add_option("--in", encode.in, "Ingress switch id");
  encode_cmd->add_option("--out", encode.out, "Egress switch id");
  encode_cmd->add_option("-o,--output", encode.output_file, "Output file");

  BenchCommand bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Encode and explain every GraphML file of a directory");
  bench_cmd->add_option("dataset", bench.dataset_dir, "Directory")
      ->required();
  bench_cmd->add_option("--timeout", bench.timeout_seconds,
                        "Per-topology analysis timeout in seconds")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench.output_file, "CSV output file");
  bench_cmd->add_option("--jobs", bench.jobs, "Topologies analyzed in parallel")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*explain_cmd) {
    explain.minimize = !no_minimize;
    std::string field;
    for (char c : field_order + ",") {
      if (c == ',') {
        if (!field.empty()) explain.field_order.push_back(field);
        field.clear();
      } else if (c != ' ') {
        field += c;
      }
    }
    return RunExplain(explain, std::cout, std::cerr);
  }
  if (*oracle_cmd) return RunOracleCheck(oracle, std::cout, std::cerr);
  if (*encode_cmd) return RunEncode(encode, std::cout, std::cerr);
  return RunBench(bench, std::cout, std::cerr);
}
