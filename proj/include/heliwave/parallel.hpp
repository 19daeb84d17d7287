// Copyright 2026 The heliwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HELIWAVE_PARALLEL_HPP
#define HELIWAVE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace heliwave {

/// Name of the environment variable holding the default worker count.
inline constexpr const char* kThreadsEnvVar = "HELIWAVE_THREADS";

/// Worker count from HELIWAVE_THREADS, falling back to the hardware concurrency.
int default_thread_count();

/// Runs fn(i) for i in [0, n) over contiguous chunks on `threads` workers
/// (threads <= 0 means default_thread_count()). Callers write results into
/// slot i so output never depends on scheduling. If any call throws, the
/// exception from the lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace heliwave

#endif
