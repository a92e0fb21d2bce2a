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

#include "tierforge/parallel.hpp"

#include <algorithm>

namespace tierforge {

ThreadPool::ThreadPool(unsigned n_threads)
    : n_threads_(std::max(1u, n_threads)) {
  workers_.reserve(n_threads_ - 1);
  for (unsigned i = 0; i + 1 < n_threads_; ++i)
    workers_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    shutdown_ = true;
  }
  work_cv_.notify_all();
  for (std::thread& w : workers_) w.join();
}

void ThreadPool::parallel_for(
    std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  // Chunk count depends only on n and the pool size; oversubscribe a
  // little so uneven chunks can be stolen by idle workers.
  const std::size_t max_chunks =
      n_threads_ == 1 ? 1 : std::size_t{4} * n_threads_;
  const std::size_t chunks = std::min(n, max_chunks);
  const std::size_t chunk = (n + chunks - 1) / chunks;
  if (n_threads_ == 1 || chunks == 1) {
    fn(0, n);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    batch_.fn = &fn;
    batch_.n = n;
    batch_.chunk = chunk;
    batch_.next_chunk = 0;
    batch_.chunks_total = chunks;
    batch_.chunks_done = 0;
    has_batch_ = true;
  }
  work_cv_.notify_all();
  // The caller participates until chunks run out, then waits for stragglers.
  while (run_one_chunk()) {
  }
  std::unique_lock<std::mutex> lock(mu_);
  done_cv_.wait(lock,
                [this] { return batch_.chunks_done == batch_.chunks_total; });
  has_batch_ = false;
}

bool ThreadPool::run_one_chunk() {
  std::size_t index = 0;
  const std::function<void(std::size_t, std::size_t)>* fn = nullptr;
  std::size_t begin = 0;
  std::size_t end = 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!has_batch_ || batch_.next_chunk >= batch_.chunks_total) return false;
    index = batch_.next_chunk++;
    fn = batch_.fn;
    begin = index * batch_.chunk;
    end = std::min(batch_.n, begin + batch_.chunk);
  }
  (*fn)(begin, end);
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++batch_.chunks_done;
    if (batch_.chunks_done == batch_.chunks_total) done_cv_.notify_all();
  }
  return true;
}

void ThreadPool::worker_loop() {
  for (;;) {
    {
      std::unique_lock<std::mutex> lock(mu_);
      work_cv_.wait(lock, [this] {
        return shutdown_ ||
               (has_batch_ && batch_.next_chunk < batch_.chunks_total);
      });
      if (shutdown_) return;
    }
    while (run_one_chunk()) {
    }
  }
}

}  // namespace tierforge
