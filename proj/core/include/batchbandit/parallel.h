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

#ifndef BATCHBANDIT_PARALLEL_H_
#define BATCHBANDIT_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace batchbandit {

// Worker count from BATCHBANDIT_THREADS; unset, 0 or unparsable means one
// thread per hardware core.
int ThreadCountFromEnv();

// Resolves a requested thread count: positive values are used as is, 0 falls
// back to ThreadCountFromEnv().
int ResolveThreads(int requested);

// Calls fn(i) for every i in [0, n). Work is handed out dynamically, so fn
// must only touch state owned by index i; callers reduce afterwards in index
// order to keep results independent of scheduling.
void ParallelFor(int64_t n, int threads, const std::function<void(int64_t)>& fn);

}  // namespace batchbandit

#endif  // BATCHBANDIT_PARALLEL_H_
