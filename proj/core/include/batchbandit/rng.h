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

#ifndef BATCHBANDIT_RNG_H_
#define BATCHBANDIT_RNG_H_

#include <cstdint>
#include <limits>
#include <random>

#include "absl/strings/string_view.h"

namespace batchbandit {

// Identifies one independent random stream. The draw sequence of the stream
// is a pure function of (master_seed, replication_id, draw index).
struct RngStreamSpec {
  uint64_t master_seed = 0;
  uint64_t replication_id = 0;

  friend bool operator==(const RngStreamSpec&,
                         const RngStreamSpec&) = default;
};

// A single-threaded generator handle. Satisfies UniformRandomBitGenerator so
// it can drive the <random> distributions directly. Parallel work uses one
// handle per replication id; handles are never shared between threads.
class RngStream {
 public:
  using result_type = uint64_t;

  explicit RngStream(const RngStreamSpec& spec);

  static constexpr result_type min() {
    return std::numeric_limits<result_type>::min();
  }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform();
  // Standard normal.
  double Normal();

  const RngStreamSpec& spec() const { return spec_; }

 private:
  RngStreamSpec spec_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline RngStream MakeRngStream(uint64_t master_seed, uint64_t replication_id) {
  return RngStream(RngStreamSpec{master_seed, replication_id});
}

// Stable 64-bit FNV-1a hash used to derive replication ids from labelled
// tuples (policy, grid kind, horizon, replication).
uint64_t HashLabel(absl::string_view label, uint64_t h = 14695981039346656037ULL);
uint64_t HashCombine(uint64_t h, uint64_t value);

}  // namespace batchbandit

#endif  // BATCHBANDIT_RNG_H_
