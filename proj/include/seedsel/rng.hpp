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

#ifndef SEEDSEL_RNG_HPP_
#define SEEDSEL_RNG_HPP_

#include <cstdint>
#include <vector>

namespace seedsel {

// Counter-based generator: output i is splitmix64(seed + i * golden gamma),
// a pure function of (seed, i). The ranking file format documents this
// generator so rankings replay identically on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : seed_(seed) {}

  uint64_t at(uint64_t index) const {
    uint64_t x = seed_ + (index + 1) * 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  uint64_t next() { return at(counter_++); }

  // Unbiased draw in [0, bound) by rejection; consumes one or more outputs.
  uint64_t next_below(uint64_t bound);

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

// Fisher-Yates permutation of 0..n-1 driven by SplitMix64(seed).
std::vector<uint32_t> seeded_permutation(uint32_t n, uint64_t seed);

}  // namespace seedsel

#endif  // SEEDSEL_RNG_HPP_
