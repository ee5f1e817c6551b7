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

#ifndef SEEDSEL_SELECTION_HPP_
#define SEEDSEL_SELECTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seedsel/corpus.hpp"
#include "seedsel/frequency.hpp"
#include "seedsel/scoring.hpp"
#include "seedsel/thread_pool.hpp"

namespace seedsel {

enum class ScorerKind { s, sn, sng, ent };

struct EntOptions {
  int chosen_order = 5;  // model over the chosen set, retrained every pick
  int side_order = 2;    // left/right models, trained once per run
  int warm_start = 5;    // leading picks scored by SN before the entropy form
  double discount = 0.75;
};

struct MethodSpec {
  ScorerKind kind = ScorerKind::sng;
  int order = 4;  // highest n-gram order J; 1 for s/sn
  EntOptions ent;
  std::string name;  // header echo, e.g. "sng4", "entK", "aggL5"

  int coverage_order() const { return kind == ScorerKind::sng ? order : 1; }
  bool normalized() const { return kind != ScorerKind::s; }
};

struct RankingEntry {
  uint32_t rank = 0;  // 1-based
  uint32_t line = 0;
  double score = 0.0;
  uint64_t cum_words = 0;
};

// Ordered selection emitted to translators. The text form is normative:
// '#'-prefixed key=value header lines in fixed order, then
// rank,line_id,score,cum_words rows. Identical inputs yield identical bytes.
struct Ranking {
  std::string method;
  std::vector<std::pair<std::string, std::string>> params;  // echoed in order
  std::vector<std::string> ref_languages;
  uint64_t budget = 0;
  std::string budget_language;
  std::string corpus_checksum;
  std::optional<uint64_t> seed;  // random baseline only
  double train_fraction = 3.0;   // recorded train/valid split of the seed corpus
  double valid_fraction = 0.2;
  bool exhausted = false;  // corpus ran out before the budget was met
  std::vector<RankingEntry> entries;

  uint64_t words_selected() const {
    return entries.empty() ? 0 : entries.back().cum_words;
  }
};

std::string format_ranking(const Ranking& ranking);
Ranking parse_ranking(std::string_view text);
Ranking load_ranking(const std::string& path);
// Writes to a temp file in the same directory, then renames into place.
void write_ranking(const Ranking& ranking, const std::string& path);

// Checks rank contiguity, strictly increasing cumulative words, and the
// budget stop rule (everything before the last entry is under budget).
void check_ranking_invariants(const Ranking& ranking);

enum class Engine { memoized, naive };

// Languages-by-sentences score matrix with relaxed memoization: after a
// pick, only columns sharing a newly covered n-gram with the picked line
// (found through the inverted index) are recomputed; everything else is
// reused. The naive path recomputes every unselected column each step and
// exists as the equivalence oracle.
class ScoreMatrix {
 public:
  ScoreMatrix(std::vector<const FrequencyTable*> rows, int coverage_order, bool normalize);

  size_t num_rows() const { return tables_.size(); }
  uint32_t num_lines() const { return num_lines_; }
  const FrequencyTable& row_table(size_t row) const { return *tables_[row]; }
  const CoverageState& coverage(size_t row) const { return coverage_[row]; }
  double value(size_t row, uint32_t col) const { return values_[row][col]; }

  void refresh(ThreadPool& pool);      // stale entries only
  void refresh_all(ThreadPool& pool);  // every unselected entry

  // Updates coverage for the picked line in every row; with track_stale,
  // marks exactly the columns whose score the pick changed.
  void apply_pick(uint32_t line, bool track_stale = true);

  std::vector<uint32_t> stale_columns(size_t row) const;

  bool is_selected(uint32_t line) const { return selected_[line] != 0; }
  uint32_t num_selected() const { return num_selected_; }

  // Row-sum argmax over unselected columns, ties to the lowest line id.
  // Summation runs in row order, so results do not depend on the pool.
  std::pair<uint32_t, double> argmax_combined(ThreadPool& pool) const;

  std::vector<double> combined() const;

 private:
  void refresh_range(size_t row, uint32_t begin, uint32_t end, bool stale_only);

  std::vector<const FrequencyTable*> tables_;
  std::vector<CoverageState> coverage_;
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<uint8_t>> stale_;
  std::vector<uint8_t> selected_;
  std::vector<std::vector<uint32_t>> newly_covered_;  // scratch
  int coverage_order_;
  bool normalize_;
  uint32_t num_lines_ = 0;
  uint32_t num_selected_ = 0;
};

struct SelectionOptions {
  MethodSpec method;
  std::vector<std::string> ref_languages;  // deduplicated, summed in sorted order
  uint64_t budget = 0;                     // words, > 0
  std::string budget_language;             // empty: first sorted reference language
  Engine engine = Engine::memoized;
  int jobs = 1;
  // Optional prebuilt tables keyed like ref_languages (benchmark reuse).
  std::vector<const FrequencyTable*> prebuilt;
};

Ranking select_greedy(const ParallelCorpus& corpus, const SelectionOptions& options);

Ranking select_random(const ParallelCorpus& corpus, uint64_t budget,
                      const std::string& budget_language, uint64_t seed);

Ranking select_excerpt(const ParallelCorpus& corpus, uint32_t start_line, uint64_t budget,
                       const std::string& budget_language);

}  // namespace seedsel

#endif  // SEEDSEL_SELECTION_HPP_
