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

#include "seedsel/aggregation.hpp"

#include <algorithm>
#include <map>

#include "seedsel/error.hpp"

namespace seedsel {

PoolPolicy parse_policy(std::string_view name) {
  if (name == "language" || name == "L") return PoolPolicy::per_language;
  if (name == "family" || name == "F") return PoolPolicy::per_family;
  if (name == "person" || name == "P") return PoolPolicy::per_person;
  if (name == "neighbor" || name == "N") return PoolPolicy::per_neighbor;
  throw Error(Errc::unknown_policy, std::string(name));
}

const char* policy_name(PoolPolicy policy) {
  switch (policy) {
    case PoolPolicy::per_language: return "language";
    case PoolPolicy::per_family: return "family";
    case PoolPolicy::per_person: return "person";
    case PoolPolicy::per_neighbor: return "neighbor";
  }
  return "?";
}

namespace {

bool more_spoken(const Language* a, const Language* b) {
  if (a->speakers != b->speakers) return a->speakers > b->speakers;
  return a->code < b->code;
}

}  // namespace

LanguagePool build_pool(const LanguageSet& metadata, PoolPolicy policy,
                        const std::string& target, int k) {
  if (metadata.empty()) throw Error(Errc::insufficient_metadata, "no languages");
  if (k <= 0 && (policy == PoolPolicy::per_family || policy == PoolPolicy::per_person)) {
    throw Error(Errc::bad_config, "pool size k must be positive");
  }

  LanguagePool pool;
  pool.policy = policy;
  pool.target = target;
  pool.k = (policy == PoolPolicy::per_family || policy == PoolPolicy::per_person) ? k : 0;

  std::vector<const Language*> candidates;
  for (const auto& lang : metadata.all()) {
    if (lang.code != target) candidates.push_back(&lang);
  }

  switch (policy) {
    case PoolPolicy::per_language: {
      for (const auto* lang : candidates) pool.members.push_back(lang->code);
      std::sort(pool.members.begin(), pool.members.end());
      break;
    }
    case PoolPolicy::per_family: {
      std::map<std::string, std::pair<uint64_t, const Language*>> families;
      for (const auto* lang : candidates) {
        if (lang->family.empty()) {
          throw Error(Errc::insufficient_metadata, lang->code + " has no family");
        }
        auto& [speakers, best] = families[lang->family];
        speakers += lang->speakers;
        if (!best || more_spoken(lang, best)) best = lang;
      }
      std::vector<std::pair<std::string, std::pair<uint64_t, const Language*>>> ranked(
          families.begin(), families.end());
      std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first > b.second.first;
        return a.first < b.first;
      });
      for (size_t i = 0; i < ranked.size() && i < static_cast<size_t>(k); ++i) {
        pool.members.push_back(ranked[i].second.second->code);
      }
      std::sort(pool.members.begin(), pool.members.end());
      break;
    }
    case PoolPolicy::per_person: {
      std::sort(candidates.begin(), candidates.end(), more_spoken);
      for (size_t i = 0; i < candidates.size() && i < static_cast<size_t>(k); ++i) {
        pool.members.push_back(candidates[i]->code);
      }
      std::sort(pool.members.begin(), pool.members.end());
      break;
    }
    case PoolPolicy::per_neighbor: {
      const Language& lang = metadata.at(target);
      pool.members = lang.neighbors;
      break;
    }
  }
  return pool;
}

std::vector<double> aggregate_scores(const ScoreMatrix& matrix, const LanguagePool& pool) {
  // row index per member, summed in sorted code order
  std::vector<std::string> members = pool.members;
  std::sort(members.begin(), members.end());
  std::vector<size_t> rows;
  for (const auto& code : members) {
    bool found = false;
    for (size_t r = 0; r < matrix.num_rows(); ++r) {
      if (matrix.row_table(r).language() == code) {
        rows.push_back(r);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::missing_row, code);
  }
  std::vector<double> combined(matrix.num_lines(), 0.0);
  for (uint32_t line = 0; line < matrix.num_lines(); ++line) {
    double sum = 0.0;
    for (size_t r : rows) sum += matrix.value(r, line);
    combined[line] = sum;
  }
  return combined;
}

}  // namespace seedsel
