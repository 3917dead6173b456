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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netkat/error.h"
#include "netkat/explain.h"
#include "netkat/parallel.h"
#include "netkat/parser.h"
#include "netkat/rewrite.h"
#include "netkat/topology.h"
#include "netkat/unfold.h"

namespace netkat::tools {
namespace {

using Clock = std::chrono::steady_clock;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
}

void ReportError(std::ostream& err, const std::string& context,
                 const Error& e) {
  err << "error: " << context << ": " << ErrorCodeName(e.code()) << ": "
      << e.what() << "\n";
}

double Seconds(Clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string FormatSeconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

}  // namespace

int RunExplain(const ExplainCommand& cmd, std::ostream& out,
               std::ostream& err) {
  if (cmd.format != "text" && cmd.format != "json") {
    err << "error: --format must be 'text' or 'json'\n";
    return kExitError;
  }
  try {
    SafetyProblem problem = ParseProblem(ReadFile(cmd.problem_file));
    ExplainOptions options;
    options.unfold_n = cmd.unfold;
    options.minimize = cmd.minimize;
    std::vector<FieldId> order;
    for (const std::string& f : cmd.field_order) order.emplace_back(f);
    options.normalize.order = FieldOrder::FromList(order);
    Explanation e = Explain(problem, options);
    out << (cmd.format == "json" ? ExplanationToJson(e, cmd.stats)
                                 : ExplanationToText(e, cmd.stats));
    return e.verdict == Verdict::kSafe ? kExitOk : kExitUnsafe;
  } catch (const Error& e) {
    ReportError(err, cmd.problem_file, e);
    return kExitError;
  }
}

int RunOracleCheck(const OracleCheckCommand& cmd, std::ostream& out,
                   std::ostream& err) {
  try {
    SafetyProblem problem = ParseProblem(ReadFile(cmd.problem_file));
    ExplainOptions options;
    options.unfold_n = cmd.unfold;
    const std::size_t n = ResolveUnfoldBound(problem, options);
    const Policy program = BuildProgram(problem, n);
    const bool oracle_empty = IsEmptyPolicy(program, problem.domains, cmd.cap);
    const bool rewrite_empty = Normalize(program, problem.domains).empty();
    out << "unfold n = " << n << "\n";
    out << "rewrite: " << (rewrite_empty ? "empty" : "non-empty") << "\n";
    out << "oracle:  " << (oracle_empty ? "empty" : "non-empty") << "\n";
    if (rewrite_empty == oracle_empty) {
      out << "AGREE\n";
      return kExitOk;
    }
    out << "DISAGREE\n";
    if (std::optional<Packet> w =
            FindWitness(program, problem.domains, cmd.cap)) {
      out << "witness packet: " << PacketSpace(problem.domains).ToString(*w)
          << "\n";
    }
    return kExitUnsafe;
  } catch (const Error& e) {
    ReportError(err, cmd.problem_file, e);
    return kExitError;
  }
}

int RunEncode(const EncodeCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    TopologyGraph g = LoadGraphmlFile(cmd.graphml_file);
    SafetyProblem problem = MakeBenchmarkProblem(g, cmd.in, cmd.out);
    ProblemLayout layout;
    layout.header_comments.push_back(
        "generated from " +
        std::filesystem::path(cmd.graphml_file).filename().string());
    layout.header_comments.push_back(
        std::to_string(g.Switches().size()) + " switches, " +
        std::to_string(g.InternalLinks().size()) + " directed links");
    layout.bindings.emplace_back("forwarding", problem.switch_policy);
    layout.bindings.emplace_back("links", problem.topology);
    layout.policy_name = "forwarding";
    layout.topology_name = "links";
    std::string text = FormatProblem(problem, layout);
    if (cmd.output_file.empty()) {
      out << text;
    } else {
      WriteFile(cmd.output_file, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    ReportError(err, cmd.graphml_file, e);
    return kExitError;
  }
}

BenchRow BenchOne(const std::string& graphml_file, double timeout_seconds) {
  BenchRow row;
  row.file = std::filesystem::path(graphml_file).filename().string();
  const auto io_start = Clock::now();
  SafetyProblem problem;
  try {
    TopologyGraph g = LoadGraphml(ReadFile(graphml_file));
    row.nodes = g.nodes.size();
    row.directed_links = g.InternalLinks().size();
    SafetyProblem generated = MakeBenchmarkProblem(g);
    ProblemLayout layout;
    layout.bindings.emplace_back("forwarding", generated.switch_policy);
    layout.bindings.emplace_back("links", generated.topology);
    layout.policy_name = "forwarding";
    layout.topology_name = "links";
    problem = ParseProblem(FormatProblem(generated, layout));
  } catch (const Error& e) {
    row.io_time_s = Seconds(Clock::now() - io_start);
    row.status = std::string("ERROR: ") + e.what();
    return row;
  }
  row.io_time_s = Seconds(Clock::now() - io_start);
  row.unfold_n = problem.unfold_n.value_or(0);

  const auto analysis_start = Clock::now();
  try {
    ExplainOptions options;
    options.normalize.deadline =
        analysis_start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(timeout_seconds));
    Explanation e = Explain(problem, options);
    row.summands_before_reduction = e.stats.summands_before_reduction;
    row.paths = e.paths.size();
    row.verdict = std::string(VerdictName(e.verdict));
    row.status = "ok";
  } catch (const Error& e) {
    row.status = e.code() == ErrorCode::kTimeout
                     ? "TIMEOUT"
                     : std::string("ERROR: ") + e.what();
  }
  row.analysis_time_s = Seconds(Clock::now() - analysis_start);
  return row;
}

std::string BenchCsvHeader() {
  return "file,nodes,directed_links,unfold_n,summands_before_reduction,paths,"
         "verdict,analysis_time_s,io_time_s,status\n";
}

std::string BenchCsvRow(const BenchRow& row) {
  return CsvField(row.file) + "," + std::to_string(row.nodes) + "," +
         std::to_string(row.directed_links) + "," +
         std::to_string(row.unfold_n) + "," +
         std::to_string(row.summands_before_reduction) + "," +
         std::to_string(row.paths) + "," + row.verdict + "," +
         FormatSeconds(row.analysis_time_s) + "," +
         FormatSeconds(row.io_time_s) + "," + CsvField(row.status) + "\n";
}

int RunBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  try {
    namespace fs = std::filesystem;
    if (!fs::is_directory(cmd.dataset_dir)) {
      throw Error(ErrorCode::kIo,
                  "'" + cmd.dataset_dir + "' is not a directory");
    }
    for (const auto& entry : fs::directory_iterator(cmd.dataset_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".graphml") {
        files.push_back(entry.path().string());
      }
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    ReportError(err, cmd.dataset_dir, e);
    return kExitError;
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchRow> rows(files.size());
  const std::size_t jobs = std::max<std::size_t>(
      1, std::min(cmd.jobs, WorkerCount()));
  ParallelFor(files.size(), jobs,
              [&](std::size_t, std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                  rows[i] = BenchOne(files[i], cmd.timeout_seconds);
                }
              });
  std::string csv = BenchCsvHeader();
  for (const BenchRow& row : rows) csv += BenchCsvRow(row);
  try {
    if (cmd.output_file.empty()) {
      out << csv;
    } else {
      WriteFile(cmd.output_file, csv);
    }
  } catch (const Error& e) {
    ReportError(err, cmd.output_file, e);
    return kExitError;
  }
  return kExitOk;
}

}  // namespace netkat::tools
