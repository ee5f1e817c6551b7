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

#include "seedsel/rng.hpp"

namespace seedsel {

uint64_t SplitMix64::next_below(uint64_t bound) {
  // Reject draws from the tail of the 64-bit range so every residue is
  // equally likely.
  uint64_t limit = bound * ((~uint64_t{0}) / bound);
  for (;;) {
    uint64_t r = next();
    if (r < limit) return r % bound;
  }
}

std::vector<uint32_t> seeded_permutation(uint32_t n, uint64_t seed) {
  std::vector<uint32_t> order(n);
  for (uint32_t i = 0; i < n; ++i) order[i] = i;
  SplitMix64 rng(seed);
  for (uint32_t i = n; i > 1; --i) {
    uint32_t j = static_cast<uint32_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace seedsel
