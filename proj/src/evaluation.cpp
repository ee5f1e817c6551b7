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

#include "seedsel/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "seedsel/error.hpp"
#include "seedsel/text.hpp"

namespace seedsel {

namespace {

struct OrderStats {
  uint64_t hyp = 0;
  uint64_t ref = 0;
  uint64_t match = 0;
};

// Clipped character n-gram matches per order over whitespace-stripped text.
void accumulate_chrf(std::string_view hyp_raw, std::string_view ref_raw, int max_order,
                     std::vector<OrderStats>* stats) {
  std::string hyp = strip_whitespace(hyp_raw);
  std::string ref = strip_whitespace(ref_raw);
  auto hyp_off = utf8_offsets(hyp);
  auto ref_off = utf8_offsets(ref);
  size_t hyp_len = hyp_off.size() - 1;
  size_t ref_len = ref_off.size() - 1;
  for (int n = 1; n <= max_order; ++n) {
    auto& s = (*stats)[n - 1];
    uint64_t hyp_total = hyp_len >= static_cast<size_t>(n) ? hyp_len - n + 1 : 0;
    uint64_t ref_total = ref_len >= static_cast<size_t>(n) ? ref_len - n + 1 : 0;
    s.hyp += hyp_total;
    s.ref += ref_total;
    if (hyp_total == 0 || ref_total == 0) continue;
    std::unordered_map<std::string_view, uint64_t> ref_grams;
    ref_grams.reserve(ref_total * 2);
    for (size_t i = 0; i + n <= ref_len; ++i) {
      std::string_view gram(ref.data() + ref_off[i], ref_off[i + n] - ref_off[i]);
      ++ref_grams[gram];
    }
    for (size_t i = 0; i + n <= hyp_len; ++i) {
      std::string_view gram(hyp.data() + hyp_off[i], hyp_off[i + n] - hyp_off[i]);
      auto it = ref_grams.find(gram);
      if (it != ref_grams.end() && it->second > 0) {
        --it->second;
        ++s.match;
      }
    }
  }
}

double chrf_from_stats(const std::vector<OrderStats>& stats, double beta) {
  double sum = 0.0;
  int effective = 0;
  double beta2 = beta * beta;
  for (const auto& s : stats) {
    if (s.hyp == 0 && s.ref == 0) continue;  // nothing of this order on either side
    ++effective;
    double precision = s.hyp > 0 ? static_cast<double>(s.match) / static_cast<double>(s.hyp) : 0.0;
    double recall = s.ref > 0 ? static_cast<double>(s.match) / static_cast<double>(s.ref) : 0.0;
    double denom = beta2 * precision + recall;
    if (denom > 0.0) sum += (1.0 + beta2) * precision * recall / denom;
  }
  if (effective == 0) return 0.0;
  return 100.0 * sum / static_cast<double>(effective);
}

}  // namespace

double chrf_corpus(std::span<const std::string> hypotheses,
                   std::span<const std::string> references, ChrfParams params) {
  if (hypotheses.size() != references.size()) {
    throw Error(Errc::length_mismatch, std::to_string(hypotheses.size()) + " hypotheses vs " +
                                           std::to_string(references.size()) + " references");
  }
  if (params.max_order < 1 || params.beta <= 0.0) {
    throw Error(Errc::bad_config, "chrf needs max_order >= 1 and beta > 0");
  }
  std::vector<OrderStats> stats(params.max_order);
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    accumulate_chrf(hypotheses[i], references[i], params.max_order, &stats);
  }
  return chrf_from_stats(stats, params.beta);
}

double chrf(std::string_view hypothesis, std::string_view reference, ChrfParams params) {
  if (params.max_order < 1 || params.beta <= 0.0) {
    throw Error(Errc::bad_config, "chrf needs max_order >= 1 and beta > 0");
  }
  std::vector<OrderStats> stats(params.max_order);
  accumulate_chrf(hypothesis, reference, params.max_order, &stats);
  return chrf_from_stats(stats, params.beta);
}

namespace {

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> out;
  size_t pos = 0;
  std::string cur;
  size_t begin = 0;
  while (pos < text.size()) {
    size_t start = pos;
    char32_t cp = utf8_next(text, &pos);
    if (is_space_cp(cp)) {
      if (start > begin) out.emplace_back(text.substr(begin, start - begin));
      begin = pos;
    }
  }
  if (text.size() > begin) out.emplace_back(text.substr(begin));
  return out;
}

}  // namespace

double bleu(std::span<const std::string> hypotheses, std::span<const std::string> references,
            BleuParams params) {
  if (hypotheses.size() != references.size()) {
    throw Error(Errc::length_mismatch, std::to_string(hypotheses.size()) + " hypotheses vs " +
                                           std::to_string(references.size()) + " references");
  }
  const int N = params.max_order;
  std::vector<uint64_t> hyp_total(N, 0), match(N, 0);
  uint64_t hyp_len = 0, ref_len = 0;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    auto hyp = whitespace_tokens(hypotheses[i]);
    auto ref = whitespace_tokens(references[i]);
    hyp_len += hyp.size();
    ref_len += ref.size();
    for (int n = 1; n <= N; ++n) {
      if (hyp.size() + 1 < static_cast<size_t>(n) + 1) break;
      std::unordered_map<std::string, uint64_t> ref_grams;
      for (size_t k = 0; k + n <= ref.size(); ++k) {
        std::string gram = ref[k];
        for (int m = 1; m < n; ++m) gram += " " + ref[k + m];
        ++ref_grams[gram];
      }
      hyp_total[n - 1] += hyp.size() - n + 1;
      for (size_t k = 0; k + n <= hyp.size(); ++k) {
        std::string gram = hyp[k];
        for (int m = 1; m < n; ++m) gram += " " + hyp[k + m];
        auto it = ref_grams.find(gram);
        if (it != ref_grams.end() && it->second > 0) {
          --it->second;
          ++match[n - 1];
        }
      }
    }
  }
  if (hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= N; ++n) {
    double m = static_cast<double>(match[n - 1]);
    double h = static_cast<double>(hyp_total[n - 1]);
    if (params.smooth && n > 1) {
      m += 1.0;
      h += 1.0;
    }
    if (m <= 0.0 || h <= 0.0) return 0.0;
    log_sum += std::log(m / h);
  }
  double bp = 1.0;
  if (hyp_len < ref_len) {
    bp = std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  }
  return 100.0 * bp * std::exp(log_sum / static_cast<double>(N));
}

std::pair<size_t, double> centeredness_combine(std::span<const std::string> candidates,
                                               ChrfParams similarity) {
  if (candidates.empty()) throw Error(Errc::empty_candidate_list, "no candidates");
  size_t best = 0;
  double best_sum = 0.0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < candidates.size(); ++j) {
      if (j == i) continue;
      sum += chrf(candidates[i], candidates[j], similarity);
    }
    if (i == 0 || sum > best_sum) {
      best = i;
      best_sum = sum;
    }
  }
  return {best, best_sum};
}

TestSetSpec intersection_test_set(const ParallelCorpus& corpus,
                                  std::span<const Ranking> rankings) {
  std::vector<uint8_t> excluded(corpus.num_lines(), 0);
  for (const auto& ranking : rankings) {
    if (ranking.corpus_checksum != corpus.checksum()) {
      throw Error(Errc::corpus_mismatch,
                  "ranking checksum " + ranking.corpus_checksum + " != corpus checksum " +
                      corpus.checksum());
    }
    for (const auto& e : ranking.entries) {
      if (e.line >= corpus.num_lines()) {
        throw Error(Errc::unknown_line, std::to_string(e.line));
      }
      excluded[e.line] = 1;
    }
  }
  TestSetSpec spec;
  spec.corpus_checksum = corpus.checksum();
  for (uint32_t line = 0; line < corpus.num_lines(); ++line) {
    if (!excluded[line]) spec.included.push_back(line);
  }
  return spec;
}

std::string format_test_set(const TestSetSpec& spec) {
  std::string out;
  out += "#seedsel_test_set=1\n";
  out += "#corpus_checksum=" + spec.corpus_checksum + "\n";
  out += "#included=" + std::to_string(spec.included.size()) + "\n";
  for (uint32_t line : spec.included) {
    out += std::to_string(line);
    out += '\n';
  }
  return out;
}

TestSetSpec parse_test_set(std::string_view text) {
  TestSetSpec spec;
  size_t pos = 0;
  bool saw_magic = false;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      size_t eq = line.find('=');
      std::string_view key = line.substr(1, eq - 1);
      std::string_view value = eq == std::string_view::npos ? "" : line.substr(eq + 1);
      if (key == "seedsel_test_set") saw_magic = true;
      else if (key == "corpus_checksum") spec.corpus_checksum = std::string(value);
      // #included is informative
      continue;
    }
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw Error(Errc::parse_error, "test set line '" + std::string(line) + "'");
    }
    spec.included.push_back(v);
  }
  if (!saw_magic) throw Error(Errc::parse_error, "not a test set file");
  return spec;
}

}  // namespace seedsel
