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

#include "seedsel/thread_pool.hpp"

namespace seedsel {

ThreadPool::ThreadPool(size_t workers) {
  if (workers > 1) {
    threads_.reserve(workers - 1);
    for (size_t i = 0; i + 1 < workers; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::run_tasks(Job* job) {
  for (;;) {
    size_t i = job->next.fetch_add(1, std::memory_order_relaxed);
    if (i >= job->count) break;
    (*job->fn)(i);
    job->done.fetch_add(1, std::memory_order_acq_rel);
  }
}

void ThreadPool::worker_loop() {
  uint64_t seen = 0;
  for (;;) {
    Job* job = nullptr;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      wake_.wait(lock, [&] { return stop_ || (job_ != nullptr && epoch_ != seen); });
      if (stop_) return;
      job = job_;
      seen = epoch_;
      ++active_;
    }
    run_tasks(job);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      --active_;
    }
    idle_.notify_all();
  }
}

void ThreadPool::parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  if (threads_.empty() || count == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  Job job;
  job.count = count;
  job.fn = &fn;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    job_ = &job;
    ++epoch_;
  }
  wake_.notify_all();
  run_tasks(&job);
  // The job may only leave scope once every task ran and no worker still
  // holds a pointer to it.
  std::unique_lock<std::mutex> lock(mutex_);
  idle_.wait(lock, [&] {
    return active_ == 0 && job.done.load(std::memory_order_acquire) == job.count;
  });
  job_ = nullptr;
}

}  // namespace seedsel
