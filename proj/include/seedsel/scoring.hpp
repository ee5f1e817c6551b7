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

#ifndef SEEDSEL_SCORING_HPP_
#define SEEDSEL_SCORING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seedsel/corpus.hpp"
#include "seedsel/frequency.hpp"
#include "seedsel/ngram_lm.hpp"

namespace seedsel {

// N-grams already present in some selected line, per order. "Unknown" in the
// score functions means absent from the covered set of the gram's own order.
// Covered sets only grow; the frequency table never changes.
class CoverageState {
 public:
  CoverageState(const FrequencyTable& table, int max_order);

  int max_order() const { return max_order_; }
  const FrequencyTable& table() const { return *table_; }

  bool covered(int order, uint32_t gram) const { return covered_[order - 1][gram] != 0; }
  bool covered_tokens(std::span<const std::string> gram) const;

  // Marks every gram of the line (orders 1..max_order) covered. Gram ids
  // newly covered by this call are appended to newly[order-1] when given.
  void add_line(uint32_t line, std::vector<std::vector<uint32_t>>* newly = nullptr);

  const std::vector<uint32_t>& selected() const { return selected_; }
  bool is_selected(uint32_t line) const { return selected_mask_[line] != 0; }

  uint64_t words_used() const { return words_used_; }
  void set_words_used(uint64_t w) { words_used_ = w; }

 private:
  const FrequencyTable* table_;
  int max_order_;
  std::vector<std::vector<uint8_t>> covered_;  // [order-1][gram id]
  std::vector<uint32_t> selected_;
  std::vector<uint8_t> selected_mask_;
  uint64_t words_used_ = 0;
};

// Sum over orders 1..max_order of the frequencies of the line's uncovered
// grams; every position counts, including repeats. Exact integer sum,
// divided by token count when normalize is set (0 for empty lines). This
// single kernel is the arithmetic path shared by the memoized and naive
// engines.
double line_score(const FrequencyTable& table, const CoverageState& cov, uint32_t line,
                  int max_order, bool normalize);

// Table-style score functions over arbitrary token lists. Grams absent from
// the table count 0 and are never covered.
double score_s(const TokenizedLine& line, const FrequencyTable& table,
               const CoverageState& cov);
double score_sn(const TokenizedLine& line, const FrequencyTable& table,
                const CoverageState& cov);
// Throws OrderExceedsTable when order > table.max_order().
double score_sng(const TokenizedLine& line, const FrequencyTable& table,
                 const CoverageState& cov, int order);

// Fixed split of the corpus into chosen lines c plus two halves l and r of
// the remainder. The halves are frozen at construction: first ceil(n/2)
// lines left, rest right, in corpus order.
class EntPartition {
 public:
  explicit EntPartition(uint32_t num_lines);

  uint32_t num_lines() const { return static_cast<uint32_t>(side_.size()); }
  bool in_left(uint32_t line) const { return side_[line] == 0; }
  bool in_chosen(uint32_t line) const { return chosen_[line] != 0; }
  void choose(uint32_t line);

  std::vector<uint32_t> left_lines() const;
  std::vector<uint32_t> right_lines() const;
  uint32_t left_size() const { return initial_left_ - chosen_left_; }
  uint32_t right_size() const { return num_lines() - initial_left_ - chosen_right_; }

 private:
  std::vector<uint8_t> side_;  // 0 left, 1 right, frozen
  std::vector<uint8_t> chosen_;
  uint32_t initial_left_ = 0;
  uint32_t chosen_left_ = 0;
  uint32_t chosen_right_ = 0;
};

// Entropy score: H_c(line) minus the cross entropy under the opposite
// half's model. Throws LineInChosenSet for already chosen lines.
double score_ent(uint32_t line, std::span<const uint32_t> token_ids,
                 const EntPartition& part, const NgramLm& lm_chosen,
                 const NgramLm& lm_left, const NgramLm& lm_right);

}  // namespace seedsel

#endif  // SEEDSEL_SCORING_HPP_
