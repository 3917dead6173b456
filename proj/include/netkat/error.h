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

#ifndef NETKAT_ERROR_H_
#define NETKAT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace netkat {

enum class ErrorCode {
  kSyntaxError,
  kUndeclaredField,
  kValueOutOfDomain,
  kMissingSection,
  kUnsupportedConstruct,
  kDomainTooLarge,
  kMalformedTopology,
  kParseError,
  kEmptyGraph,
  kTimeout,
  kIo,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. `line()`/`column()` are
// 1-based and only set for errors that point into an input text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::size_t line,
        std::size_t column)
      : std::runtime_error(message), code_(code), line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorCode code_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace netkat

#endif  // NETKAT_ERROR_H_
