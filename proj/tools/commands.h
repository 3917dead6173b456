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
// Subcommands of the `safecheck` binary. Exit codes: 0 safe / agree / ok,
// 1 unsafe / disagree, 2 error.

#ifndef NETKAT_TOOLS_COMMANDS_H_
#define NETKAT_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netkat/oracle.h"

namespace netkat::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsafe = 1;
inline constexpr int kExitError = 2;

struct ExplainCommand {
  std::string problem_file;
  std::optional<std::size_t> unfold;
  bool minimize = true;
  std::string format = "text";  // text | json
  std::vector<std::string> field_order;
  bool stats = false;
};
int RunExplain(const ExplainCommand& cmd, std::ostream& out,
               std::ostream& err);

struct OracleCheckCommand {
  std::string problem_file;
  std::optional<std::size_t> unfold;
  std::uint64_t cap = kDefaultPacketCap;
};
int RunOracleCheck(const OracleCheckCommand& cmd, std::ostream& out,
                   std::ostream& err);

struct EncodeCommand {
  std::string graphml_file;
  std::optional<std::string> in;
  std::optional<std::string> out;
  // Empty writes to `out`.
  std::string output_file;
};
int RunEncode(const EncodeCommand& cmd, std::ostream& out, std::ostream& err);

struct BenchCommand {
  std::string dataset_dir;
  double timeout_seconds = 12000.0;
  // Empty writes to `out`.
  std::string output_file;
  std::size_t jobs = 1;
};
int RunBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);

// One benchmark measurement. io_time covers reading and encoding the
// GraphML and writing and re-parsing the problem text; analysis_time covers
// explain.
struct BenchRow {
  std::string file;
  std::size_t nodes = 0;
  std::size_t directed_links = 0;
  std::size_t unfold_n = 0;
  std::uint64_t summands_before_reduction = 0;
  std::size_t paths = 0;
  std::string verdict;  // safe | unsafe | empty when not analyzed
  double analysis_time_s = 0.0;
  double io_time_s = 0.0;
  std::string status;  // ok | TIMEOUT | ERROR: message
};
BenchRow BenchOne(const std::string& graphml_file, double timeout_seconds);
std::string BenchCsvHeader();
std::string BenchCsvRow(const BenchRow& row);

}  // namespace netkat::tools

#endif  // NETKAT_TOOLS_COMMANDS_H_
