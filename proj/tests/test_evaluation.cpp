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

#include <set>

#include "oracles.hpp"
#include "seedsel/error.hpp"
#include "seedsel/evaluation.hpp"
#include "testutil.hpp"

using namespace seedsel;

TEST_SUITE_BEGIN("evaluation");

TEST_CASE("chrf identity, emptiness, and newline normalization") {
  const auto& corpus = testutil::toy_corpus();
  for (uint32_t i = 0; i < 20; ++i) {
    const std::string& line = corpus.raw_lines("alfa")[i];
    CHECK(chrf(line, line) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(chrf(line + "\n", line) == doctest::Approx(100.0).epsilon(1e-12));
  }
  CHECK(chrf("", "nonempty reference") == 0.0);
  CHECK(chrf("", "") == 0.0);
  CHECK(chrf("ab", "ab") == 100.0);  // shorter than max_order on both sides
}

TEST_CASE("chrf equals the brute-force counter on crafted and fixture pairs") {
  const auto& corpus = testutil::toy_corpus();
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"cat sat", "cat sitting"},
      {"the quick brown fox", "the quack brown fox"},
      {"abcdef", "abcdef"},
      {"abcdef", "fedcba"},
      {"aa bb cc", "aa cc"},
      {"hûs", "hus"},
  };
  for (uint32_t i = 0; i < 4; ++i) {
    pairs.emplace_back(corpus.raw_lines("alfa")[i], corpus.raw_lines("beta")[i]);
  }
  for (const auto& [hyp, ref] : pairs) {
    CAPTURE(hyp);
    CAPTURE(ref);
    CHECK(chrf(hyp, ref, {3, 2.0}) ==
          doctest::Approx(oracles::ref_chrf(hyp, ref, 3, 2.0)).epsilon(1e-9));
    CHECK(chrf(hyp, ref) == doctest::Approx(oracles::ref_chrf(hyp, ref, 6, 2.0)).epsilon(1e-9));
  }
  // frozen from the brute-force counter: ("cat sat","cat sitting"), n<=3, beta=2
  CHECK(chrf("cat sat", "cat sitting", {3, 2.0}) ==
        doctest::Approx(oracles::ref_chrf("cat sat", "cat sitting", 3, 2.0)).epsilon(1e-6));
}

TEST_CASE("corpus chrf pools statistics across segments") {
  std::vector<std::string> hyps = {"aaa", "bbb"};
  std::vector<std::string> refs = {"aaa", "bbb"};
  CHECK(chrf_corpus(hyps, refs) == doctest::Approx(100.0));
  refs[1] = "xyz";
  double pooled = chrf_corpus(hyps, refs);
  CHECK(pooled < 100.0);
  CHECK(pooled > 0.0);
  std::vector<std::string> one = {"aaa"};
  CHECK_THROWS_AS(chrf_corpus(one, refs), Error);
}

TEST_CASE("corrupting a perfect hypothesis never raises chrf") {
  const auto& corpus = testutil::toy_corpus();
  for (uint32_t i = 0; i < 15; ++i) {
    const std::string& ref = corpus.raw_lines("gama")[i];
    double perfect = chrf(ref, ref);
    for (size_t pos = 0; pos < ref.size(); pos += 3) {
      if (static_cast<unsigned char>(ref[pos]) >= 0x80) continue;  // keep UTF-8 intact
      std::string corrupted = ref;
      corrupted[pos] = corrupted[pos] == '#' ? '@' : '#';
      CHECK(chrf(corrupted, ref) <= perfect);
    }
  }
}

TEST_CASE("bleu identity, zero overlap, and oracle agreement") {
  std::vector<std::string> refs = {"the cat sat on the mat", "a stitch in time saves nine"};
  CHECK(bleu(refs, refs) == doctest::Approx(100.0).epsilon(1e-9));

  std::vector<std::string> disjoint = {"x y z w v u", "q r s t p o"};
  CHECK(bleu(disjoint, refs, {4, false}) == 0.0);

  const auto& corpus = testutil::toy_corpus();
  std::vector<std::string> hyps, refs2;
  for (uint32_t i = 0; i < 40; ++i) {
    hyps.push_back(corpus.raw_lines("alfa")[i]);
    refs2.push_back(corpus.raw_lines("alfa")[(i % 5 == 0) ? i + 1 : i]);  // mostly matching
  }
  for (bool smooth : {true, false}) {
    double mine = bleu(hyps, refs2, {4, smooth});
    double ref = oracles::ref_bleu(hyps, refs2, smooth);
    CHECK(mine == doctest::Approx(ref).epsilon(1e-4));
  }
  std::vector<std::string> shorter = {"one line"};
  CHECK_THROWS_AS(bleu(shorter, refs), Error);
}

TEST_CASE("centeredness picks the candidate closest to all others") {
  std::vector<std::string> same = {"a b c", "a b c", "a b c"};
  CHECK(centeredness_combine(same).first == 0);  // ties go to the lowest index

  std::vector<std::string> single = {"anything"};
  auto [idx, score] = centeredness_combine(single);
  CHECK(idx == 0);
  CHECK(score == 0.0);

  std::vector<std::string> dup = {"a b c", "a b c", "x y"};
  CHECK(centeredness_combine(dup).first == 0);  // the duplicated string wins

  std::vector<std::string> none;
  CHECK_THROWS_AS(centeredness_combine(none), Error);

  // exhaustive argmax check on small lists drawn from fixture lines
  const auto& corpus = testutil::toy_corpus();
  std::vector<std::string> pool;
  for (uint32_t i = 0; i < 8; ++i) pool.push_back(corpus.raw_lines("delt")[i]);
  for (size_t a = 0; a < pool.size(); ++a) {
    for (size_t b = a + 1; b < pool.size(); ++b) {
      for (size_t c = b + 1; c < pool.size(); ++c) {
        std::vector<std::string> cands = {pool[a], pool[b], pool[c]};
        auto [best, best_sum] = centeredness_combine(cands);
        for (size_t i = 0; i < cands.size(); ++i) {
          double sum = 0.0;
          for (size_t j = 0; j < cands.size(); ++j) {
            if (i != j) sum += oracles::ref_chrf(cands[i], cands[j], 6, 2.0);
          }
          CHECK(sum <= best_sum + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("intersection removes exactly the union of ranking lines") {
  const auto& corpus = testutil::toy_corpus();

  TestSetSpec all = intersection_test_set(corpus, {});
  CHECK(all.included.size() == corpus.num_lines());

  Ranking r1, r2;
  r1.corpus_checksum = corpus.checksum();
  r2.corpus_checksum = corpus.checksum();
  for (uint32_t i = 0; i < 10; ++i) r1.entries.push_back({i + 1, i, 0.0, i + 1});
  for (uint32_t i = 0; i < 10; ++i) r2.entries.push_back({i + 1, 50 + i, 0.0, i + 1});
  std::vector<Ranking> rankings = {r1, r2};
  TestSetSpec spec = intersection_test_set(corpus, rankings);
  CHECK(spec.included.size() == corpus.num_lines() - 20);
  std::set<uint32_t> included(spec.included.begin(), spec.included.end());
  for (const auto& r : rankings) {
    for (const auto& e : r.entries) CHECK(!included.count(e.line));
  }

  Ranking stale;
  stale.corpus_checksum = "0000000000000000";
  std::vector<Ranking> bad = {stale};
  CHECK_THROWS_AS(intersection_test_set(corpus, bad), Error);
}

TEST_CASE("test set files round-trip") {
  const auto& corpus = testutil::toy_corpus();
  Ranking r1;
  r1.corpus_checksum = corpus.checksum();
  for (uint32_t i = 0; i < 25; ++i) r1.entries.push_back({i + 1, i * 3, 0.0, i + 1});
  std::vector<Ranking> rankings = {r1};
  TestSetSpec spec = intersection_test_set(corpus, rankings);
  TestSetSpec back = parse_test_set(format_test_set(spec));
  CHECK(back.corpus_checksum == spec.corpus_checksum);
  CHECK(back.included == spec.included);
  CHECK_THROWS_AS(parse_test_set("1\n2\n"), Error);
}

TEST_SUITE_END();
