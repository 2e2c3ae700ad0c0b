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

#include "fastsm/thread_pool.h"

#include <algorithm>
#include <stdexcept>

namespace fastsm {

ThreadPool::ThreadPool(int num_threads) {
  if (num_threads < 1) {
    throw std::invalid_argument("ThreadPool: num_threads must be >= 1");
  }
  workers_.reserve(num_threads - 1);
  for (int i = 1; i < num_threads; ++i) {
    workers_.emplace_back([this] { WorkerLoop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  work_cv_.notify_all();
  for (auto& t : workers_) t.join();
}

void ThreadPool::RunChunks() {
  for (;;) {
    const std::size_t begin = next_.fetch_add(grain_);
    if (begin >= job_size_) return;
    const std::size_t end = std::min(job_size_, begin + grain_);
    try {
      (*job_)(begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = std::current_exception();
      // Drain the remaining chunks so everyone stops quickly.
      next_.store(job_size_);
    }
  }
}

void ThreadPool::WorkerLoop() {
  std::uint64_t seen = 0;
  std::unique_lock<std::mutex> lock(mu_);
  for (;;) {
    ++parked_;
    done_cv_.notify_all();
    work_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
    --parked_;
    if (stop_) return;
    seen = generation_;
    ++busy_;
    lock.unlock();
    RunChunks();
    lock.lock();
    --busy_;
    done_cv_.notify_all();
  }
}

void ThreadPool::ParallelFor(std::size_t n, const ChunkFn& fn) {
  if (n == 0) return;
  if (workers_.empty() || n == 1) {
    fn(0, n);
    return;
  }
  {
    std::unique_lock<std::mutex> lock(mu_);
    // A previous job's stragglers may still be leaving RunChunks.
    done_cv_.wait(lock, [&] { return busy_ == 0; });
    job_ = &fn;
    job_size_ = n;
    grain_ = std::max<std::size_t>(1, n / (8 * static_cast<std::size_t>(
                                               num_threads())));
    next_.store(0);
    error_ = nullptr;
    ++generation_;
  }
  work_cv_.notify_all();
  RunChunks();
  std::exception_ptr error;
  {
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [&] { return busy_ == 0; });
    job_ = nullptr;
    error = error_;
    error_ = nullptr;
  }
  if (error) std::rethrow_exception(error);
}

void ThreadPool::Barrier() {
  std::unique_lock<std::mutex> lock(mu_);
  done_cv_.wait(lock, [&] {
    return busy_ == 0 && parked_ == static_cast<int>(workers_.size());
  });
}

}  // namespace fastsm
