// Copyright 2026 The qwalk Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace qwalk {

/// Number of worker threads used by the parallel kernels.
///
/// Defaults to the QWALK_THREADS environment variable when set, otherwise to
/// the hardware concurrency. Results never depend on this value: every
/// parallel loop writes disjoint outputs and reductions are done afterwards in
/// index order.
std::size_t thread_count();
void set_thread_count(std::size_t threads);

/// Runs body(i) for i in [begin, end) split into contiguous chunks, one per
/// worker. Falls back to a plain loop for small ranges.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body,
                  std::size_t min_chunk = 1);

/// Scoped override of the thread count, restored on destruction.
class ThreadCountGuard {
 public:
  explicit ThreadCountGuard(std::size_t threads);
  ~ThreadCountGuard();
  ThreadCountGuard(const ThreadCountGuard&) = delete;
  ThreadCountGuard& operator=(const ThreadCountGuard&) = delete;

 private:
  std::size_t previous_;
};

}  // namespace qwalk
