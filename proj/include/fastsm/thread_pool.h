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

#ifndef FASTSM_THREAD_POOL_H_
#define FASTSM_THREAD_POOL_H_

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fastsm {

// Fixed-size fork/join pool. The calling thread takes part in every
// ParallelFor, so a pool of N threads owns N - 1 background workers and a
// pool of one thread runs everything inline.
//
// Work items must be independent: ParallelFor makes no promise about which
// thread runs which chunk, only that every index is visited exactly once and
// that all of them have finished when it returns.
class ThreadPool {
 public:
  using ChunkFn = std::function<void(std::size_t begin, std::size_t end)>;

  explicit ThreadPool(int num_threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int num_threads() const { return static_cast<int>(workers_.size()) + 1; }

  // Calls fn on disjoint chunks covering [0, n). Rethrows the first exception
  // raised by any chunk after all chunks have stopped.
  void ParallelFor(std::size_t n, const ChunkFn& fn);

  // Blocks until every background worker is parked waiting for work.
  void Barrier();

 private:
  void WorkerLoop();
  void RunChunks();

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable work_cv_;
  std::condition_variable done_cv_;
  std::uint64_t generation_ = 0;
  int parked_ = 0;
  int busy_ = 0;
  bool stop_ = false;

  // Current job; valid while busy_ > 0 or the caller is running chunks.
  const ChunkFn* job_ = nullptr;
  std::size_t job_size_ = 0;
  std::size_t grain_ = 1;
  std::atomic<std::size_t> next_{0};
  std::exception_ptr error_;
};

// Runs fn over [0, n) on `pool`, or inline when pool is null.
inline void ParallelFor(ThreadPool* pool, std::size_t n,
                        const ThreadPool::ChunkFn& fn) {
  if (pool == nullptr) {
    if (n > 0) fn(0, n);
    return;
  }
  pool->ParallelFor(n, fn);
}

}  // namespace fastsm

#endif  // FASTSM_THREAD_POOL_H_
