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

#ifndef SEEDSEL_FREQUENCY_HPP_
#define SEEDSEL_FREQUENCY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seedsel {

class ParallelCorpus;

// Per-language frequency table over the full text: occurrence counts of every
// n-gram of order 1..max_order, with n-grams never crossing line boundaries.
// Counts are computed once and frozen.
//
// Internally every n-gram gets a dense id per order. An order-j id is interned
// from (id of its (j-1)-token prefix, last token id), so ids are exact, not
// hashes. Per-line id streams drive the scoring kernels and the inverted index
// used by relaxed memoization.
class FrequencyTable {
 public:
  FrequencyTable(const ParallelCorpus& corpus, std::string_view lang, int max_order);
  FrequencyTable(const std::vector<std::vector<std::string>>& lines, int max_order,
                 std::string lang = "");

  const std::string& language() const { return lang_; }
  int max_order() const { return max_order_; }
  uint32_t num_lines() const { return static_cast<uint32_t>(line_len_.size()); }
  uint64_t total_tokens() const { return total_tokens_; }
  uint32_t vocab_size() const { return static_cast<uint32_t>(token_names_.size()); }

  // Token-string lookup; 0 for n-grams never seen. Order = gram.size().
  uint64_t count(std::span<const std::string> gram) const;
  uint64_t count(std::initializer_list<std::string> gram) const;

  // Dense access for the scoring kernels.
  uint32_t num_grams(int order) const { return static_cast<uint32_t>(counts(order).size()); }
  std::span<const uint32_t> counts(int order) const { return orders_[order - 1].counts; }
  std::span<const uint32_t> line_grams(int order, uint32_t line) const;
  uint32_t line_length(uint32_t line) const { return line_len_[line]; }

  // Interns a token sequence against this table's dictionaries. Grams absent
  // from the full text come back as kNoGram (their count is 0 and they can
  // never be covered).
  static constexpr uint32_t kNoGram = 0xFFFFFFFFu;
  uint32_t find_gram(std::span<const std::string> gram) const;
  uint32_t find_token(std::string_view token) const;

  // Lines containing a given gram at least once, ascending, each line once.
  std::span<const uint32_t> lines_with(int order, uint32_t gram) const;

 private:
  struct OrderData {
    // (prefix id << 32 | token id) -> dense gram id; order 1 keys on token id.
    std::unordered_map<uint64_t, uint32_t> intern;
    std::vector<uint32_t> counts;           // by gram id
    std::vector<uint32_t> stream;           // concatenated per-line gram ids
    std::vector<uint64_t> line_offset;      // num_lines + 1
    // inverted index, CSR over gram ids
    std::vector<uint64_t> post_offset;
    std::vector<uint32_t> postings;
  };

  void build(const std::vector<std::vector<std::string>>& lines);

  std::string lang_;
  int max_order_;
  uint64_t total_tokens_ = 0;
  std::unordered_map<std::string, uint32_t> token_ids_;
  std::vector<std::string> token_names_;
  std::vector<uint32_t> line_len_;
  std::vector<OrderData> orders_;
};

}  // namespace seedsel

#endif  // SEEDSEL_FREQUENCY_HPP_
