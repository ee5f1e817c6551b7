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

#include "seedsel/scoring.hpp"

#include "seedsel/error.hpp"

namespace seedsel {

CoverageState::CoverageState(const FrequencyTable& table, int max_order)
    : table_(&table), max_order_(max_order) {
  if (max_order < 1 || max_order > table.max_order()) {
    throw Error(Errc::order_exceeds_table,
                "coverage order " + std::to_string(max_order) + " > table order " +
                    std::to_string(table.max_order()));
  }
  covered_.resize(max_order_);
  for (int j = 1; j <= max_order_; ++j) {
    covered_[j - 1].assign(table.num_grams(j), 0);
  }
  selected_mask_.assign(table.num_lines(), 0);
}

bool CoverageState::covered_tokens(std::span<const std::string> gram) const {
  if (gram.empty() || gram.size() > static_cast<size_t>(max_order_)) return false;
  uint32_t id = table_->find_gram(gram);
  if (id == FrequencyTable::kNoGram) return false;
  return covered(static_cast<int>(gram.size()), id);
}

void CoverageState::add_line(uint32_t line, std::vector<std::vector<uint32_t>>* newly) {
  if (line >= table_->num_lines()) throw Error(Errc::unknown_line, std::to_string(line));
  if (newly) newly->assign(max_order_, {});
  if (!selected_mask_[line]) {
    selected_mask_[line] = 1;
    selected_.push_back(line);
  }
  for (int j = 1; j <= max_order_; ++j) {
    auto& cov = covered_[j - 1];
    for (uint32_t g : table_->line_grams(j, line)) {
      if (!cov[g]) {
        cov[g] = 1;
        if (newly) (*newly)[j - 1].push_back(g);
      }
    }
  }
}

double line_score(const FrequencyTable& table, const CoverageState& cov, uint32_t line,
                  int max_order, bool normalize) {
  uint64_t sum = 0;
  for (int j = 1; j <= max_order; ++j) {
    auto counts = table.counts(j);
    for (uint32_t g : table.line_grams(j, line)) {
      if (!cov.covered(j, g)) sum += counts[g];
    }
  }
  uint32_t len = table.line_length(line);
  if (!normalize) return static_cast<double>(sum);
  if (len == 0) return 0.0;
  return static_cast<double>(sum) / static_cast<double>(len);
}

namespace {

// Same position-by-position sum as line_score, over arbitrary token lists.
double token_score(const TokenizedLine& line, const FrequencyTable& table,
                   const CoverageState& cov, int max_order, bool normalize) {
  if (max_order > table.max_order()) {
    throw Error(Errc::order_exceeds_table,
                "order " + std::to_string(max_order) + " > table order " +
                    std::to_string(table.max_order()));
  }
  const size_t len = line.tokens.size();
  uint64_t sum = 0;
  for (int j = 1; j <= max_order; ++j) {
    if (len < static_cast<size_t>(j)) break;
    auto counts = table.counts(j);
    for (size_t i = 0; i + j <= len; ++i) {
      auto gram = std::span<const std::string>(line.tokens.data() + i, static_cast<size_t>(j));
      uint32_t id = table.find_gram(gram);
      if (id == FrequencyTable::kNoGram) continue;  // count 0 either way
      if (!cov.covered(j, id)) sum += counts[id];
    }
  }
  if (!normalize) return static_cast<double>(sum);
  if (len == 0) return 0.0;
  return static_cast<double>(sum) / static_cast<double>(len);
}

}  // namespace

double score_s(const TokenizedLine& line, const FrequencyTable& table,
               const CoverageState& cov) {
  return token_score(line, table, cov, 1, false);
}

double score_sn(const TokenizedLine& line, const FrequencyTable& table,
                const CoverageState& cov) {
  return token_score(line, table, cov, 1, true);
}

double score_sng(const TokenizedLine& line, const FrequencyTable& table,
                 const CoverageState& cov, int order) {
  return token_score(line, table, cov, order, true);
}

EntPartition::EntPartition(uint32_t num_lines) {
  side_.assign(num_lines, 1);
  chosen_.assign(num_lines, 0);
  initial_left_ = (num_lines + 1) / 2;
  for (uint32_t i = 0; i < initial_left_; ++i) side_[i] = 0;
}

void EntPartition::choose(uint32_t line) {
  if (line >= side_.size()) throw Error(Errc::unknown_line, std::to_string(line));
  if (chosen_[line]) return;
  chosen_[line] = 1;
  if (side_[line] == 0) {
    ++chosen_left_;
  } else {
    ++chosen_right_;
  }
}

std::vector<uint32_t> EntPartition::left_lines() const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < side_.size(); ++i) {
    if (side_[i] == 0 && !chosen_[i]) out.push_back(i);
  }
  return out;
}

std::vector<uint32_t> EntPartition::right_lines() const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < side_.size(); ++i) {
    if (side_[i] == 1 && !chosen_[i]) out.push_back(i);
  }
  return out;
}

double score_ent(uint32_t line, std::span<const uint32_t> token_ids,
                 const EntPartition& part, const NgramLm& lm_chosen,
                 const NgramLm& lm_left, const NgramLm& lm_right) {
  if (part.in_chosen(line)) {
    throw Error(Errc::line_in_chosen_set, std::to_string(line));
  }
  double h_c = lm_chosen.cross_entropy(token_ids);
  const NgramLm& opposite = part.in_left(line) ? lm_right : lm_left;
  return h_c - opposite.cross_entropy(token_ids);
}

}  // namespace seedsel
