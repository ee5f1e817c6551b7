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

#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "seedsel/error.hpp"
#include "seedsel/frequency.hpp"
#include "seedsel/scoring.hpp"
#include "testutil.hpp"

using namespace seedsel;

namespace {

TokenizedLine toks(std::initializer_list<const char*> words) {
  TokenizedLine line;
  for (const char* w : words) line.tokens.emplace_back(w);
  return line;
}

}  // namespace

TEST_SUITE_BEGIN("scoring");

TEST_CASE("frequency sum of unknown words") {
  auto corpus = ParallelCorpus::from_lines({{"xx", {"a b", "a"}}});  // F(a)=2, F(b)=1
  FrequencyTable table(corpus, "xx", 1);
  CoverageState cov(table, 1);

  CHECK(score_s(toks({"a", "b"}), table, cov) == 3.0);
  CHECK(score_sn(toks({"a", "b"}), table, cov) == 1.5);
  CHECK(score_s(toks({}), table, cov) == 0.0);
  CHECK(score_sn(toks({}), table, cov) == 0.0);

  cov.add_line(0);  // covers a, b
  CHECK(score_s(toks({"a", "b"}), table, cov) == 0.0);
  CHECK(score_sn(toks({"a", "b"}), table, cov) == 0.0);
}

TEST_CASE("normalized n-gram sum on the documented toy line") {
  auto corpus = ParallelCorpus::from_lines({{"xx", {"a b a"}}});
  FrequencyTable table(corpus, "xx", 2);
  CoverageState cov(table, 2);

  // (F(a)+F(b)+F(a) + F(ab)+F(ba)) / 3 = (2+1+2+1+1)/3
  CHECK(score_sng(toks({"a", "b", "a"}), table, cov, 2) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(score_sng(toks({"a", "b", "a"}), table, cov, 2) == 7.0 / 3.0);

  cov.add_line(0);
  CHECK(score_sng(toks({"a", "b", "a"}), table, cov, 2) == 0.0);

  CHECK_THROWS_AS(score_sng(toks({"a"}), table, cov, 3), Error);  // order 3 > table order
}

TEST_CASE("sng with order 1 is exactly sn") {
  const auto& corpus = testutil::toy_corpus();
  FrequencyTable table(corpus, "alfa", 1);
  CoverageState cov(table, 1);
  SplitMix64 rng(7);
  for (int step = 0; step < 40; ++step) {
    for (uint32_t line = 0; line < corpus.num_lines(); ++line) {
      TokenizedLine tl = corpus.tokenized_line("alfa", line);
      CHECK(score_sng(tl, table, cov, 1) == score_sn(tl, table, cov));
    }
    cov.add_line(static_cast<uint32_t>(rng.next_below(corpus.num_lines())));
  }
}

TEST_CASE("dense kernel agrees with the string-path scorers and the reference oracle") {
  auto lines = testutil::random_corpus_lines(321, 1, 60, 40);
  auto corpus = ParallelCorpus::from_lines(lines);
  const int J = 3;
  FrequencyTable table(corpus, "lg0", J);
  CoverageState cov(table, J);
  oracles::RefScorer ref(corpus.tokens("lg0"), J);
  std::set<std::string> ref_covered;

  SplitMix64 rng(5);
  for (int step = 0; step < 15; ++step) {
    for (uint32_t line = 0; line < corpus.num_lines(); ++line) {
      TokenizedLine tl = corpus.tokenized_line("lg0", line);
      double dense = line_score(table, cov, line, J, true);
      double strings = score_sng(tl, table, cov, J);
      double oracle = ref.score(tl.tokens, ref_covered, J, true);
      CHECK(dense == strings);
      CHECK(dense == oracle);
      CHECK(line_score(table, cov, line, 1, false) == ref.score(tl.tokens, ref_covered, 1, false));
    }
    uint32_t pick = static_cast<uint32_t>(rng.next_below(corpus.num_lines()));
    cov.add_line(pick);
    oracles::RefScorer::cover_line(corpus.tokens("lg0")[pick], J, &ref_covered);
  }
}

TEST_CASE("scores decay monotonically as coverage grows") {
  const auto& corpus = testutil::toy_corpus();
  const int J = 3;
  FrequencyTable table(corpus, "beta", J);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CoverageState cov(table, J);
    uint32_t probe = static_cast<uint32_t>(rng.next_below(corpus.num_lines()));
    double last_s = line_score(table, cov, probe, 1, false);
    double last_sn = line_score(table, cov, probe, 1, true);
    double last_sng = line_score(table, cov, probe, J, true);
    for (int step = 0; step < 30; ++step) {
      cov.add_line(static_cast<uint32_t>(rng.next_below(corpus.num_lines())));
      double s = line_score(table, cov, probe, 1, false);
      double sn = line_score(table, cov, probe, 1, true);
      double sng = line_score(table, cov, probe, J, true);
      CHECK(s <= last_s);
      CHECK(sn <= last_sn);
      CHECK(sng <= last_sng);
      last_s = s;
      last_sn = sn;
      last_sng = sng;
    }
  }
}

TEST_CASE("fully covered lines score zero under every variant") {
  const auto& corpus = testutil::toy_corpus();
  FrequencyTable table(corpus, "gama", 4);
  CoverageState cov(table, 4);
  for (uint32_t line = 0; line < 50; ++line) {
    cov.add_line(line);
    TokenizedLine tl = corpus.tokenized_line("gama", line);
    CHECK(score_s(tl, table, cov) == 0.0);
    CHECK(score_sn(tl, table, cov) == 0.0);
    CHECK(score_sng(tl, table, cov, 4) == 0.0);
    CHECK(line_score(table, cov, line, 4, true) == 0.0);
  }
}

TEST_CASE("partition halves differ by at most one and stay disjoint") {
  for (uint32_t n : {1u, 2u, 5u, 6u, 199u, 200u}) {
    EntPartition part(n);
    auto left = part.left_lines();
    auto right = part.right_lines();
    CHECK(left.size() + right.size() == n);
    CHECK(std::abs(int(left.size()) - int(right.size())) <= 1);
    CHECK(left.size() == part.left_size());
    CHECK(right.size() == part.right_size());
    std::set<uint32_t> seen(left.begin(), left.end());
    for (uint32_t r : right) CHECK(!seen.count(r));
    // the split point is deterministic: first ceil(n/2) lines are left
    for (uint32_t i = 0; i < n; ++i) CHECK(part.in_left(i) == (i < (n + 1) / 2));
  }
}

TEST_CASE("entropy score is the chosen-model entropy minus the opposite half") {
  auto corpus = ParallelCorpus::from_lines(testutil::random_corpus_lines(77, 1, 30, 25));
  FrequencyTable table(corpus, "lg0", 1);
  EntPartition part(corpus.num_lines());
  const uint32_t V = table.vocab_size();

  NgramLm lm_c(2, Smoothing::absolute_discount, V);
  NgramLm lm_l(2, Smoothing::absolute_discount, V);
  NgramLm lm_r(2, Smoothing::absolute_discount, V);
  for (uint32_t i = 0; i < 5; ++i) {
    part.choose(i);
    lm_c.add_line(table.line_grams(1, i));
  }
  for (uint32_t i = 5; i < corpus.num_lines(); ++i) {
    (part.in_left(i) ? lm_l : lm_r).add_line(table.line_grams(1, i));
  }

  for (uint32_t line = 5; line < corpus.num_lines(); ++line) {
    auto ids = table.line_grams(1, line);
    double expected = lm_c.cross_entropy(ids) -
                      (part.in_left(line) ? lm_r : lm_l).cross_entropy(ids);
    CHECK(score_ent(line, ids, part, lm_c, lm_l, lm_r) == expected);
  }
  // already-chosen lines are rejected
  CHECK_THROWS_AS(score_ent(2, table.line_grams(1, 2), part, lm_c, lm_l, lm_r), Error);
}

TEST_CASE("coverage state tracks selected lines and token-level lookups") {
  auto corpus = ParallelCorpus::from_lines({{"xx", {"a b c", "c d"}}});
  FrequencyTable table(corpus, "xx", 2);
  CoverageState cov(table, 2);
  CHECK_FALSE(cov.covered_tokens(std::vector<std::string>{"a"}));
  cov.add_line(0);
  CHECK(cov.covered_tokens(std::vector<std::string>{"a"}));
  CHECK(cov.covered_tokens(std::vector<std::string>{"a", "b"}));
  CHECK_FALSE(cov.covered_tokens(std::vector<std::string>{"c", "d"}));
  CHECK(cov.is_selected(0));
  CHECK_FALSE(cov.is_selected(1));
  CHECK(cov.selected() == std::vector<uint32_t>{0});
}

TEST_SUITE_END();
