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

#ifndef SEEDSEL_NGRAM_LM_HPP_
#define SEEDSEL_NGRAM_LM_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace seedsel {

enum class Smoothing {
  // Raw relative frequencies; unseen events have probability zero and the
  // cross entropy of a line containing one is infinite.
  mle,
  // Interpolated absolute discounting with a uniform floor over the
  // vocabulary plus one unknown slot; every event keeps nonzero mass.
  absolute_discount,
};

// Count-based n-gram model over dense token ids. Lines are padded on the
// left with order-1 begin markers; padding conditions probabilities but is
// never scored itself. Tokens >= vocab_size are folded into one unknown id.
class NgramLm {
 public:
  NgramLm(int order, Smoothing smoothing, uint32_t vocab_size, double discount = 0.75);

  int order() const { return order_; }
  Smoothing smoothing() const { return smoothing_; }
  uint32_t vocab_size() const { return vocab_size_; }
  uint32_t unk_id() const { return vocab_size_; }
  uint64_t total_tokens() const { return total_tokens_; }

  // Bulk training. Throws EmptyTrainingSet for non-MLE smoothing on zero
  // tokens.
  void fit(std::span<const std::vector<uint32_t>> lines);
  // Incremental counts for one more line.
  void add_line(std::span<const uint32_t> tokens);

  // P(token | context), context being the up-to-(order-1) preceding ids,
  // oldest first; shorter contexts are treated as begin-of-line padded.
  double prob(uint32_t token, std::span<const uint32_t> context) const;

  // Bits per token, 0 for the empty line, +inf when an MLE model meets an
  // unseen event.
  double cross_entropy(std::span<const uint32_t> tokens) const;
  double perplexity(std::span<const std::vector<uint32_t>> lines) const;

  // Observed contexts at a given order (without counts), for audits.
  std::vector<std::vector<uint32_t>> observed_contexts(int order) const;

 private:
  struct ContextStats {
    uint64_t total = 0;
    std::unordered_map<uint32_t, uint32_t> counts;
  };

  static std::string pack(std::span<const uint32_t> ids);
  double prob_at(int order, uint32_t token, std::span<const uint32_t> context) const;
  uint32_t bos_id() const { return vocab_size_ + 1; }
  uint32_t clamp_token(uint32_t token) const { return token >= vocab_size_ ? unk_id() : token; }

  int order_;
  Smoothing smoothing_;
  uint32_t vocab_size_;
  double discount_;
  uint64_t total_tokens_ = 0;
  // maps_[j-1]: packed (j-1)-id context -> stats of its extensions
  std::vector<std::unordered_map<std::string, ContextStats>> maps_;
};

}  // namespace seedsel

#endif  // SEEDSEL_NGRAM_LM_HPP_
