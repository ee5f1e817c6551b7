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

#ifndef SEEDSEL_EVALUATION_HPP_
#define SEEDSEL_EVALUATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seedsel/corpus.hpp"
#include "seedsel/selection.hpp"

namespace seedsel {

struct ChrfParams {
  int max_order = 6;
  double beta = 2.0;
};

// Character n-gram F-score in [0,100]: per order, precision/recall of
// clipped n-gram matches over whitespace-stripped code points; F_beta per
// order, averaged over orders where either side has n-grams. Identical
// nonempty strings score 100; an empty hypothesis against a nonempty
// reference scores 0.
double chrf(std::string_view hypothesis, std::string_view reference, ChrfParams params = {});

// Corpus-level chrF: match/total statistics summed over aligned pairs first.
double chrf_corpus(std::span<const std::string> hypotheses,
                   std::span<const std::string> references, ChrfParams params = {});

struct BleuParams {
  int max_order = 4;
  bool smooth = true;  // add-one on the counts of orders >= 2
};

// Corpus-level BLEU in [0,100] over whitespace tokens: geometric mean of
// clipped n-gram precisions (orders 1..4) times the brevity penalty.
// Throws LengthMismatch when the lists differ in length.
double bleu(std::span<const std::string> hypotheses, std::span<const std::string> references,
            BleuParams params = {});

// Picks the candidate with the highest sum of sentence chrF similarities to
// all other candidates; ties go to the lowest index. A single candidate
// returns {0, 0.0}. Throws EmptyCandidateList when empty.
std::pair<size_t, double> centeredness_combine(std::span<const std::string> candidates,
                                               ChrfParams similarity = {});

// Shared test set: every corpus line not claimed by any ranking.
struct TestSetSpec {
  std::string corpus_checksum;
  std::vector<uint32_t> included;  // ascending line indices
};

// Removes the union of all rankings' lines (their train and valid halves
// alike) from the corpus. Every ranking must carry this corpus' checksum.
TestSetSpec intersection_test_set(const ParallelCorpus& corpus,
                                  std::span<const Ranking> rankings);

std::string format_test_set(const TestSetSpec& spec);
TestSetSpec parse_test_set(std::string_view text);

}  // namespace seedsel

#endif  // SEEDSEL_EVALUATION_HPP_
