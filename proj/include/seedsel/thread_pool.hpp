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

#ifndef SEEDSEL_THREAD_POOL_HPP_
#define SEEDSEL_THREAD_POOL_HPP_

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace seedsel {

// Fixed-size worker pool for fork/join loops. Task outputs must not depend
// on which worker runs them; selection relies on that to keep results
// independent of --jobs.
class ThreadPool {
 public:
  // `workers` is the total degree of parallelism including the calling
  // thread, so ThreadPool(1) spawns nothing and runs everything inline.
  explicit ThreadPool(size_t workers);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  size_t size() const { return threads_.size() + 1; }

  // Runs fn(0), ..., fn(count-1) and blocks until all complete. Tasks are
  // claimed from a shared counter. fn must not throw.
  void parallel_for(size_t count, const std::function<void(size_t)>& fn);

 private:
  struct Job {
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    size_t count = 0;
    const std::function<void(size_t)>* fn = nullptr;
  };

  void worker_loop();
  static void run_tasks(Job* job);

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable idle_;
  Job* job_ = nullptr;
  uint64_t epoch_ = 0;
  size_t active_ = 0;
  bool stop_ = false;
};

}  // namespace seedsel

#endif  // SEEDSEL_THREAD_POOL_HPP_
