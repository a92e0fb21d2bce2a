// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A small fixed-size thread pool with a blocking parallel_for. Work is
// split into contiguous index chunks whose boundaries depend only on the
// range size and pool size; workers write results into caller-owned
// per-index slots and all reductions happen on the calling thread, so
// results are identical for any pool size.

#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tierforge {

class ThreadPool {
 public:
  // Spawns n_threads - 1 workers; the calling thread always executes the
  // first chunk itself, so n_threads = 1 runs everything inline.
  explicit ThreadPool(unsigned n_threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned size() const { return n_threads_; }

  // Invokes fn(begin, end) over disjoint chunks covering [0, n) and blocks
  // until every chunk finishes. fn must not throw and must only write to
  // disjoint caller-owned slots.
  void parallel_for(std::size_t n,
                    const std::function<void(std::size_t, std::size_t)>& fn);

 private:
  struct Batch {
    const std::function<void(std::size_t, std::size_t)>* fn = nullptr;
    std::size_t n = 0;
    std::size_t chunk = 0;
    std::size_t next_chunk = 0;     // guarded by mu
    std::size_t chunks_total = 0;
    std::size_t chunks_done = 0;    // guarded by mu
  };

  void worker_loop();
  bool run_one_chunk();  // returns false when no chunk was available

  unsigned n_threads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable work_cv_;  // signals workers: batch or shutdown
  std::condition_variable done_cv_;  // signals caller: batch complete
  Batch batch_;
  bool has_batch_ = false;
  bool shutdown_ = false;
};

}  // namespace tierforge
