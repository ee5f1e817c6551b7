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

#include "seedsel/ngram_lm.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "seedsel/error.hpp"

namespace seedsel {

NgramLm::NgramLm(int order, Smoothing smoothing, uint32_t vocab_size, double discount)
    : order_(order), smoothing_(smoothing), vocab_size_(vocab_size), discount_(discount) {
  if (order < 1) throw Error(Errc::bad_config, "LM order must be >= 1");
  if (discount <= 0.0 || discount >= 1.0) {
    throw Error(Errc::bad_config, "discount must be in (0,1)");
  }
  maps_.resize(order_);
}

std::string NgramLm::pack(std::span<const uint32_t> ids) {
  std::string key(ids.size() * 4, '\0');
  for (size_t i = 0; i < ids.size(); ++i) {
    std::memcpy(key.data() + i * 4, &ids[i], 4);
  }
  return key;
}

void NgramLm::add_line(std::span<const uint32_t> tokens) {
  if (tokens.empty()) return;
  std::vector<uint32_t> padded(tokens.size() + order_ - 1, bos_id());
  for (size_t i = 0; i < tokens.size(); ++i) {
    padded[order_ - 1 + i] = clamp_token(tokens[i]);
  }
  for (size_t t = 0; t < tokens.size(); ++t) {
    size_t word_pos = order_ - 1 + t;
    uint32_t word = padded[word_pos];
    for (int j = 1; j <= order_; ++j) {
      auto ctx = std::span<const uint32_t>(padded.data() + word_pos - (j - 1),
                                           static_cast<size_t>(j - 1));
      ContextStats& stats = maps_[j - 1][pack(ctx)];
      ++stats.total;
      ++stats.counts[word];
    }
  }
  total_tokens_ += tokens.size();
}

void NgramLm::fit(std::span<const std::vector<uint32_t>> lines) {
  for (const auto& line : lines) add_line(line);
  if (smoothing_ != Smoothing::mle && total_tokens_ == 0) {
    throw Error(Errc::empty_training_set, "no tokens to train on");
  }
}

double NgramLm::prob_at(int order, uint32_t token, std::span<const uint32_t> context) const {
  if (order == 0) {
    // uniform floor over vocabulary plus the unknown slot
    return 1.0 / (static_cast<double>(vocab_size_) + 1.0);
  }
  auto ctx = context.subspan(context.size() - (order - 1));
  auto it = maps_[order - 1].find(pack(ctx));
  if (smoothing_ == Smoothing::mle) {
    if (it == maps_[order - 1].end() || it->second.total == 0) return 0.0;
    auto cit = it->second.counts.find(token);
    if (cit == it->second.counts.end()) return 0.0;
    return static_cast<double>(cit->second) / static_cast<double>(it->second.total);
  }
  double lower = prob_at(order - 1, token, context);
  if (it == maps_[order - 1].end() || it->second.total == 0) return lower;
  const ContextStats& stats = it->second;
  uint32_t cnt = 0;
  auto cit = stats.counts.find(token);
  if (cit != stats.counts.end()) cnt = cit->second;
  double discounted = cnt > 0 ? static_cast<double>(cnt) - discount_ : 0.0;
  double backoff_mass = discount_ * static_cast<double>(stats.counts.size());
  return (discounted + backoff_mass * lower) / static_cast<double>(stats.total);
}

double NgramLm::prob(uint32_t token, std::span<const uint32_t> context) const {
  uint32_t w = clamp_token(token);
  std::vector<uint32_t> ctx(order_ - 1, bos_id());
  size_t take = std::min(context.size(), static_cast<size_t>(order_ - 1));
  for (size_t i = 0; i < take; ++i) {
    uint32_t c = context[context.size() - take + i];
    ctx[ctx.size() - take + i] = c == bos_id() ? c : clamp_token(c);
  }
  return prob_at(order_, w, ctx);
}

double NgramLm::cross_entropy(std::span<const uint32_t> tokens) const {
  if (tokens.empty()) return 0.0;
  std::vector<uint32_t> padded(tokens.size() + order_ - 1, bos_id());
  for (size_t i = 0; i < tokens.size(); ++i) {
    padded[order_ - 1 + i] = clamp_token(tokens[i]);
  }
  double bits = 0.0;
  for (size_t t = 0; t < tokens.size(); ++t) {
    size_t word_pos = order_ - 1 + t;
    auto ctx = std::span<const uint32_t>(padded.data() + word_pos - (order_ - 1),
                                         static_cast<size_t>(order_ - 1));
    double p = prob_at(order_, padded[word_pos], ctx);
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    bits -= std::log2(p);
  }
  return bits / static_cast<double>(tokens.size());
}

double NgramLm::perplexity(std::span<const std::vector<uint32_t>> lines) const {
  double bits = 0.0;
  uint64_t count = 0;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    double h = cross_entropy(line);
    if (std::isinf(h)) return std::numeric_limits<double>::infinity();
    bits += h * static_cast<double>(line.size());
    count += line.size();
  }
  if (count == 0) return 1.0;
  return std::exp2(bits / static_cast<double>(count));
}

std::vector<std::vector<uint32_t>> NgramLm::observed_contexts(int order) const {
  std::vector<std::vector<uint32_t>> out;
  out.reserve(maps_[order - 1].size());
  for (const auto& [key, stats] : maps_[order - 1]) {
    (void)stats;
    std::vector<uint32_t> ctx(key.size() / 4);
    for (size_t i = 0; i < ctx.size(); ++i) {
      std::memcpy(&ctx[i], key.data() + i * 4, 4);
    }
    out.push_back(std::move(ctx));
  }
  return out;
}

}  // namespace seedsel
