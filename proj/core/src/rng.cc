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

#include "batchbandit/rng.h"

#include <array>
#include <cstdint>
#include <random>

#include "absl/strings/string_view.h"

namespace batchbandit {
namespace {

constexpr uint64_t kFnvPrime = 1099511628211ULL;

std::mt19937_64 SeedEngine(const RngStreamSpec& spec) {
  // seed_seq is fully specified by the standard, so the engine state is
  // portable across standard libraries.
  std::seed_seq seq{
      static_cast<uint32_t>(spec.master_seed),
      static_cast<uint32_t>(spec.master_seed >> 32),
      static_cast<uint32_t>(spec.replication_id),
      static_cast<uint32_t>(spec.replication_id >> 32),
      0x62616e64u,  // "band"
  };
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(const RngStreamSpec& spec)
    : spec_(spec), engine_(SeedEngine(spec)) {}

double RngStream::Uniform() {
  // 53 high bits -> double in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::Normal() { return normal_(engine_); }

uint64_t HashLabel(absl::string_view label, uint64_t h) {
  for (unsigned char c : label) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

uint64_t HashCombine(uint64_t h, uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace batchbandit
