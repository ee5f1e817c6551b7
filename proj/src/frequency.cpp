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

#include "seedsel/frequency.hpp"

#include "seedsel/corpus.hpp"
#include "seedsel/error.hpp"

namespace seedsel {

FrequencyTable::FrequencyTable(const ParallelCorpus& corpus, std::string_view lang,
                               int max_order)
    : lang_(lang), max_order_(max_order) {
  if (max_order < 1 || max_order > 8) {
    throw Error(Errc::bad_config, "n-gram order must be in [1,8]");
  }
  build(corpus.tokens(lang));
}

FrequencyTable::FrequencyTable(const std::vector<std::vector<std::string>>& lines,
                               int max_order, std::string lang)
    : lang_(std::move(lang)), max_order_(max_order) {
  if (max_order < 1 || max_order > 8) {
    throw Error(Errc::bad_config, "n-gram order must be in [1,8]");
  }
  build(lines);
}

void FrequencyTable::build(const std::vector<std::vector<std::string>>& lines) {
  const uint32_t n = static_cast<uint32_t>(lines.size());
  orders_.resize(max_order_);
  line_len_.resize(n);
  for (int j = 1; j <= max_order_; ++j) {
    orders_[j - 1].line_offset.assign(n + 1, 0);
  }

  // Pass over lines interning grams order by order; the order-j stream is
  // derived from the order-(j-1) stream plus one more token.
  std::vector<uint32_t> prev, cur;
  for (uint32_t line = 0; line < n; ++line) {
    const auto& toks = lines[line];
    const uint32_t len = static_cast<uint32_t>(toks.size());
    line_len_[line] = len;
    total_tokens_ += len;

    auto& o1 = orders_[0];
    prev.clear();
    prev.reserve(len);
    for (const auto& tok : toks) {
      auto [it, inserted] = token_ids_.emplace(tok, static_cast<uint32_t>(token_names_.size()));
      if (inserted) {
        token_names_.push_back(tok);
        o1.intern.emplace(it->second, static_cast<uint32_t>(o1.counts.size()));
        o1.counts.push_back(0);
      }
      // token id doubles as the order-1 gram id
      prev.push_back(it->second);
      ++o1.counts[it->second];
    }
    o1.stream.insert(o1.stream.end(), prev.begin(), prev.end());
    o1.line_offset[line + 1] = o1.stream.size();

    for (int j = 2; j <= max_order_; ++j) {
      auto& oj = orders_[j - 1];
      cur.clear();
      if (len >= static_cast<uint32_t>(j)) {
        cur.reserve(len - j + 1);
        for (uint32_t i = 0; i + j <= len; ++i) {
          uint32_t prefix = prev[i];
          uint32_t last = orders_[0].stream[o1.line_offset[line] + i + j - 1];
          uint64_t key = (static_cast<uint64_t>(prefix) << 32) | last;
          auto [it, inserted] = oj.intern.emplace(key, static_cast<uint32_t>(oj.counts.size()));
          if (inserted) oj.counts.push_back(0);
          ++oj.counts[it->second];
          cur.push_back(it->second);
        }
      }
      oj.stream.insert(oj.stream.end(), cur.begin(), cur.end());
      oj.line_offset[line + 1] = oj.stream.size();
      std::swap(prev, cur);
    }
  }

  // Inverted index: lines per gram, ascending, deduplicated.
  for (int j = 1; j <= max_order_; ++j) {
    auto& oj = orders_[j - 1];
    const size_t g = oj.counts.size();
    std::vector<uint32_t> occurrences(g, 0);
    for (uint32_t line = 0; line < n; ++line) {
      for (uint64_t k = oj.line_offset[line]; k < oj.line_offset[line + 1]; ++k) {
        ++occurrences[oj.stream[k]];
      }
    }
    oj.post_offset.assign(g + 1, 0);
    for (size_t i = 0; i < g; ++i) oj.post_offset[i + 1] = oj.post_offset[i] + occurrences[i];
    oj.postings.assign(oj.post_offset[g], 0);
    std::vector<uint64_t> cursor(oj.post_offset.begin(), oj.post_offset.end() - 1);
    for (uint32_t line = 0; line < n; ++line) {
      for (uint64_t k = oj.line_offset[line]; k < oj.line_offset[line + 1]; ++k) {
        oj.postings[cursor[oj.stream[k]]++] = line;
      }
    }
    // postings are filled in line order, so duplicates are adjacent
    uint64_t write = 0;
    std::vector<uint64_t> new_offset(g + 1, 0);
    for (size_t gi = 0; gi < g; ++gi) {
      uint64_t begin = oj.post_offset[gi];
      uint64_t end = oj.post_offset[gi + 1];
      for (uint64_t k = begin; k < end; ++k) {
        if (k > begin && oj.postings[k] == oj.postings[k - 1]) continue;
        oj.postings[write++] = oj.postings[k];
      }
      new_offset[gi + 1] = write;
    }
    oj.postings.resize(write);
    oj.post_offset = std::move(new_offset);
  }
}

std::span<const uint32_t> FrequencyTable::line_grams(int order, uint32_t line) const {
  const auto& oj = orders_[order - 1];
  return std::span<const uint32_t>(oj.stream.data() + oj.line_offset[line],
                                   oj.line_offset[line + 1] - oj.line_offset[line]);
}

std::span<const uint32_t> FrequencyTable::lines_with(int order, uint32_t gram) const {
  const auto& oj = orders_[order - 1];
  return std::span<const uint32_t>(oj.postings.data() + oj.post_offset[gram],
                                   oj.post_offset[gram + 1] - oj.post_offset[gram]);
}

uint32_t FrequencyTable::find_token(std::string_view token) const {
  auto it = token_ids_.find(std::string(token));
  return it == token_ids_.end() ? kNoGram : it->second;
}

uint32_t FrequencyTable::find_gram(std::span<const std::string> gram) const {
  if (gram.empty() || gram.size() > static_cast<size_t>(max_order_)) return kNoGram;
  uint32_t id = find_token(gram[0]);
  if (id == kNoGram) return kNoGram;
  for (size_t j = 2; j <= gram.size(); ++j) {
    uint32_t tok = find_token(gram[j - 1]);
    if (tok == kNoGram) return kNoGram;
    uint64_t key = (static_cast<uint64_t>(id) << 32) | tok;
    auto it = orders_[j - 1].intern.find(key);
    if (it == orders_[j - 1].intern.end()) return kNoGram;
    id = it->second;
  }
  return id;
}

uint64_t FrequencyTable::count(std::span<const std::string> gram) const {
  if (gram.size() > static_cast<size_t>(max_order_)) {
    throw Error(Errc::order_exceeds_table,
                "order " + std::to_string(gram.size()) + " > max order " +
                    std::to_string(max_order_));
  }
  uint32_t id = find_gram(gram);
  if (id == kNoGram) return 0;
  return orders_[gram.size() - 1].counts[id];
}

uint64_t FrequencyTable::count(std::initializer_list<std::string> gram) const {
  std::vector<std::string> v(gram);
  return count(std::span<const std::string>(v));
}

}  // namespace seedsel
