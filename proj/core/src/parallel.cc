// Copyright 2026 The batchbandit Authors.
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

#include "batchbandit/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "absl/strings/numbers.h"

namespace batchbandit {

int ThreadCountFromEnv() {
  int threads = 0;
  if (const char* env = std::getenv("BATCHBANDIT_THREADS")) {
    if (!absl::SimpleAtoi(env, &threads) || threads < 0) threads = 0;
  }
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(1, threads);
}

int ResolveThreads(int requested) {
  return requested > 0 ? requested : ThreadCountFromEnv();
}

void ParallelFor(int64_t n, int threads,
                 const std::function<void(int64_t)>& fn) {
  if (n <= 0) return;
  const int workers =
      static_cast<int>(std::min<int64_t>(std::max(1, threads), n));
  if (workers == 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  auto work = [&] {
    for (int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& thread : pool) thread.join();
}

}  // namespace batchbandit
