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

#ifndef NETKAT_PARALLEL_H_
#define NETKAT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace netkat {

// Worker cap: NETKAT_SAFECHECK_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
std::size_t WorkerCount();

// Splits [0, n) into at most `workers` contiguous chunks and runs
// `body(worker, begin, end)` on each, one thread per chunk. Returns after all
// chunks finish; the first exception thrown by any chunk is rethrown.
// `workers == 0` means `WorkerCount()`.
void ParallelFor(
    std::size_t n, std::size_t workers,
    const std::function<void(std::size_t worker, std::size_t begin,
                             std::size_t end)>& body);

}  // namespace netkat

#endif  // NETKAT_PARALLEL_H_
