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

#ifndef SEEDSEL_AGGREGATION_HPP_
#define SEEDSEL_AGGREGATION_HPP_

#include <string>
#include <vector>

#include "seedsel/corpus.hpp"
#include "seedsel/selection.hpp"

namespace seedsel {

enum class PoolPolicy {
  per_language,  // every known language except the target
  per_family,    // most-spoken member of each of the k most-spoken families
  per_person,    // k most-spoken languages
  per_neighbor,  // the target's declared neighbors
};

PoolPolicy parse_policy(std::string_view name);  // throws UnknownPolicy
const char* policy_name(PoolPolicy policy);

struct LanguagePool {
  PoolPolicy policy = PoolPolicy::per_language;
  std::string target;
  int k = 0;  // 0 where not applicable
  std::vector<std::string> members;
};

// Deterministic pool construction: speaker-count ties break by language
// code, family ties by family name. The target never joins its own pool.
LanguagePool build_pool(const LanguageSet& metadata, PoolPolicy policy,
                        const std::string& target, int k = 10);

// Sum of the pool members' rows, one value per line. Members are summed in
// sorted code order regardless of how the pool lists them, so the result is
// permutation invariant bit for bit. Rows must be fresh (refresh first).
std::vector<double> aggregate_scores(const ScoreMatrix& matrix, const LanguagePool& pool);

}  // namespace seedsel

#endif  // SEEDSEL_AGGREGATION_HPP_
