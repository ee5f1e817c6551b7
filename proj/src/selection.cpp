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

#include "seedsel/selection.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "seedsel/error.hpp"
#include "seedsel/rng.hpp"
#include "seedsel/text.hpp"

namespace seedsel {

namespace {

constexpr uint32_t kChunk = 4096;
constexpr uint32_t kNoLine = 0xFFFFFFFFu;

struct BudgetTracker {
  const std::vector<std::vector<std::string>>* tokens;
  uint64_t budget = 0;
  uint64_t used = 0;

  // Adds the line's words; true once the budget is met or crossed.
  bool add(uint32_t line) {
    used += (*tokens)[line].size();
    return used >= budget;
  }
};

double parse_double(std::string_view s, const char* what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, std::string(what) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

uint64_t parse_u64(std::string_view s, const char* what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, std::string(what) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ScoreMatrix::ScoreMatrix(std::vector<const FrequencyTable*> rows, int coverage_order,
                         bool normalize)
    : tables_(std::move(rows)), coverage_order_(coverage_order), normalize_(normalize) {
  if (tables_.empty()) throw Error(Errc::bad_config, "score matrix needs at least one row");
  num_lines_ = tables_[0]->num_lines();
  for (const auto* t : tables_) {
    if (t->num_lines() != num_lines_) {
      throw Error(Errc::alignment_mismatch, "row line counts differ");
    }
    if (coverage_order_ > t->max_order()) {
      throw Error(Errc::order_exceeds_table, t->language());
    }
  }
  coverage_.reserve(tables_.size());
  for (const auto* t : tables_) coverage_.emplace_back(*t, coverage_order_);
  values_.assign(tables_.size(), std::vector<double>(num_lines_, 0.0));
  stale_.assign(tables_.size(), std::vector<uint8_t>(num_lines_, 1));
  selected_.assign(num_lines_, 0);
}

void ScoreMatrix::refresh_range(size_t row, uint32_t begin, uint32_t end, bool stale_only) {
  const FrequencyTable& table = *tables_[row];
  const CoverageState& cov = coverage_[row];
  auto& values = values_[row];
  auto& stale = stale_[row];
  for (uint32_t line = begin; line < end; ++line) {
    if (stale_only && !stale[line]) continue;
    stale[line] = 0;
    if (selected_[line]) continue;
    values[line] = line_score(table, cov, line, coverage_order_, normalize_);
  }
}

void ScoreMatrix::refresh(ThreadPool& pool) {
  const size_t chunks = (num_lines_ + kChunk - 1) / kChunk;
  pool.parallel_for(tables_.size() * chunks, [&](size_t task) {
    size_t row = task / chunks;
    uint32_t begin = static_cast<uint32_t>((task % chunks) * kChunk);
    uint32_t end = std::min(num_lines_, begin + kChunk);
    refresh_range(row, begin, end, /*stale_only=*/true);
  });
}

void ScoreMatrix::refresh_all(ThreadPool& pool) {
  const size_t chunks = (num_lines_ + kChunk - 1) / kChunk;
  pool.parallel_for(tables_.size() * chunks, [&](size_t task) {
    size_t row = task / chunks;
    uint32_t begin = static_cast<uint32_t>((task % chunks) * kChunk);
    uint32_t end = std::min(num_lines_, begin + kChunk);
    refresh_range(row, begin, end, /*stale_only=*/false);
  });
}

void ScoreMatrix::apply_pick(uint32_t line, bool track_stale) {
  if (line >= num_lines_) throw Error(Errc::unknown_line, std::to_string(line));
  if (!selected_[line]) {
    selected_[line] = 1;
    ++num_selected_;
  }
  for (size_t row = 0; row < tables_.size(); ++row) {
    coverage_[row].add_line(line, track_stale ? &newly_covered_ : nullptr);
    if (!track_stale) continue;
    const FrequencyTable& table = *tables_[row];
    auto& stale = stale_[row];
    for (int j = 1; j <= coverage_order_; ++j) {
      for (uint32_t gram : newly_covered_[j - 1]) {
        for (uint32_t other : table.lines_with(j, gram)) {
          if (!selected_[other]) stale[other] = 1;
        }
      }
    }
  }
}

std::vector<uint32_t> ScoreMatrix::stale_columns(size_t row) const {
  std::vector<uint32_t> out;
  for (uint32_t line = 0; line < num_lines_; ++line) {
    if (stale_[row][line] && !selected_[line]) out.push_back(line);
  }
  return out;
}

std::vector<double> ScoreMatrix::combined() const {
  std::vector<double> out(num_lines_, 0.0);
  for (uint32_t line = 0; line < num_lines_; ++line) {
    double sum = 0.0;
    for (size_t row = 0; row < tables_.size(); ++row) sum += values_[row][line];
    out[line] = sum;
  }
  return out;
}

std::pair<uint32_t, double> ScoreMatrix::argmax_combined(ThreadPool& pool) const {
  const size_t chunks = (num_lines_ + kChunk - 1) / kChunk;
  std::vector<std::pair<uint32_t, double>> best(chunks, {kNoLine, 0.0});
  pool.parallel_for(chunks, [&](size_t c) {
    uint32_t begin = static_cast<uint32_t>(c * kChunk);
    uint32_t end = std::min(num_lines_, begin + kChunk);
    uint32_t best_line = kNoLine;
    double best_score = 0.0;
    for (uint32_t line = begin; line < end; ++line) {
      if (selected_[line]) continue;
      double sum = 0.0;
      for (size_t row = 0; row < tables_.size(); ++row) sum += values_[row][line];
      if (best_line == kNoLine || sum > best_score) {
        best_line = line;
        best_score = sum;
      }
    }
    best[c] = {best_line, best_score};
  });
  uint32_t best_line = kNoLine;
  double best_score = 0.0;
  for (const auto& [line, score] : best) {
    if (line == kNoLine) continue;
    if (best_line == kNoLine || score > best_score ||
        (score == best_score && line < best_line)) {
      best_line = line;
      best_score = score;
    }
  }
  return {best_line, best_score};
}

namespace {

void append_entry(Ranking* ranking, uint32_t line, double score, uint64_t cum_words) {
  RankingEntry entry;
  entry.rank = static_cast<uint32_t>(ranking->entries.size() + 1);
  entry.line = line;
  entry.score = score;
  entry.cum_words = cum_words;
  ranking->entries.push_back(entry);
}

Ranking select_with_matrix(const ParallelCorpus& corpus, const SelectionOptions& options,
                           const std::vector<std::string>& ref_sorted,
                           const std::string& budget_lang) {
  std::vector<std::unique_ptr<FrequencyTable>> owned;
  std::vector<const FrequencyTable*> rows;
  if (!options.prebuilt.empty()) {
    if (options.prebuilt.size() != ref_sorted.size()) {
      throw Error(Errc::bad_config, "prebuilt tables do not match reference languages");
    }
    rows = options.prebuilt;
  } else {
    for (const auto& lang : ref_sorted) {
      owned.push_back(std::make_unique<FrequencyTable>(corpus, lang,
                                                       options.method.coverage_order()));
      rows.push_back(owned.back().get());
    }
  }

  ThreadPool pool(static_cast<size_t>(std::max(options.jobs, 1)));
  ScoreMatrix matrix(rows, options.method.coverage_order(), options.method.normalized());
  BudgetTracker budget{&corpus.tokens(budget_lang), options.budget};

  Ranking ranking;
  const bool memoized = options.engine == Engine::memoized;
  for (;;) {
    if (matrix.num_selected() == matrix.num_lines()) {
      ranking.exhausted = true;
      break;
    }
    if (memoized) {
      matrix.refresh(pool);
    } else {
      matrix.refresh_all(pool);
    }
    auto [line, score] = matrix.argmax_combined(pool);
    bool met = budget.add(line);
    append_entry(&ranking, line, score, budget.used);
    matrix.apply_pick(line, /*track_stale=*/memoized);
    if (met) break;
  }
  return ranking;
}

Ranking select_entropy(const ParallelCorpus& corpus, const SelectionOptions& options,
                       const std::vector<std::string>& ref_sorted,
                       const std::string& budget_lang) {
  if (ref_sorted.size() != 1) {
    throw Error(Errc::bad_config, "entropy methods take exactly one reference language");
  }
  const std::string& lang = ref_sorted[0];
  std::unique_ptr<FrequencyTable> owned;
  const FrequencyTable* table = nullptr;
  if (!options.prebuilt.empty()) {
    table = options.prebuilt[0];
  } else {
    owned = std::make_unique<FrequencyTable>(corpus, lang, 1);
    table = owned.get();
  }
  const uint32_t n = table->num_lines();
  const EntOptions& ent = options.method.ent;

  ThreadPool pool(static_cast<size_t>(std::max(options.jobs, 1)));
  BudgetTracker budget{&corpus.tokens(budget_lang), options.budget};
  Ranking ranking;

  EntPartition part(n);
  NgramLm lm_chosen(ent.chosen_order, Smoothing::absolute_discount, table->vocab_size(),
                    ent.discount);

  // Warm start: SN-greedy picks before the chosen-set model holds any data.
  {
    ScoreMatrix matrix({table}, 1, /*normalize=*/true);
    int picks = std::min<uint32_t>(static_cast<uint32_t>(std::max(ent.warm_start, 0)), n);
    for (int i = 0; i < picks; ++i) {
      matrix.refresh(pool);
      auto [line, score] = matrix.argmax_combined(pool);
      bool met = budget.add(line);
      append_entry(&ranking, line, score, budget.used);
      matrix.apply_pick(line);
      part.choose(line);
      lm_chosen.add_line(table->line_grams(1, line));
      if (met) return ranking;
    }
  }

  // Left/right models over the frozen halves, trained once.
  NgramLm lm_left(ent.side_order, Smoothing::absolute_discount, table->vocab_size(),
                  ent.discount);
  NgramLm lm_right(ent.side_order, Smoothing::absolute_discount, table->vocab_size(),
                   ent.discount);
  for (uint32_t line = 0; line < n; ++line) {
    if (part.in_chosen(line)) continue;
    (part.in_left(line) ? lm_left : lm_right).add_line(table->line_grams(1, line));
  }
  // Each candidate needs the opposite half's entropy; both models are fixed.
  std::vector<double> opposite(n, 0.0);
  pool.parallel_for(n, [&](size_t line) {
    if (part.in_chosen(static_cast<uint32_t>(line))) return;
    const NgramLm& lm = part.in_left(static_cast<uint32_t>(line)) ? lm_right : lm_left;
    opposite[line] = lm.cross_entropy(table->line_grams(1, static_cast<uint32_t>(line)));
  });

  std::vector<uint8_t> taken(n, 0);
  for (const auto& e : ranking.entries) taken[e.line] = 1;
  uint32_t remaining = n - static_cast<uint32_t>(ranking.entries.size());

  const size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::pair<uint32_t, double>> best(chunks);
  while (remaining > 0) {
    // The chosen-set model changes every pick, so its term is recomputed
    // for every candidate; only the side entropies are cached.
    pool.parallel_for(chunks, [&](size_t c) {
      uint32_t begin = static_cast<uint32_t>(c * kChunk);
      uint32_t end = std::min(n, begin + kChunk);
      uint32_t best_line = kNoLine;
      double best_score = 0.0;
      for (uint32_t line = begin; line < end; ++line) {
        if (taken[line]) continue;
        double score = lm_chosen.cross_entropy(table->line_grams(1, line)) - opposite[line];
        if (best_line == kNoLine || score > best_score) {
          best_line = line;
          best_score = score;
        }
      }
      best[c] = {best_line, best_score};
    });
    uint32_t pick = kNoLine;
    double pick_score = 0.0;
    for (const auto& [line, score] : best) {
      if (line == kNoLine) continue;
      if (pick == kNoLine || score > pick_score || (score == pick_score && line < pick)) {
        pick = line;
        pick_score = score;
      }
    }
    bool met = budget.add(pick);
    append_entry(&ranking, pick, pick_score, budget.used);
    taken[pick] = 1;
    part.choose(pick);
    lm_chosen.add_line(table->line_grams(1, pick));
    --remaining;
    if (met) return ranking;
  }
  ranking.exhausted = true;
  return ranking;
}

}  // namespace

Ranking select_greedy(const ParallelCorpus& corpus, const SelectionOptions& options) {
  if (options.budget == 0) throw Error(Errc::bad_config, "budget must be positive");
  if (options.ref_languages.empty()) {
    throw Error(Errc::bad_config, "at least one reference language required");
  }
  std::set<std::string> unique(options.ref_languages.begin(), options.ref_languages.end());
  std::vector<std::string> ref_sorted(unique.begin(), unique.end());
  for (const auto& lang : ref_sorted) {
    if (!corpus.has_language(lang)) throw Error(Errc::unknown_language, lang);
  }
  std::string budget_lang =
      options.budget_language.empty() ? ref_sorted[0] : options.budget_language;
  if (!corpus.has_language(budget_lang)) throw Error(Errc::unknown_language, budget_lang);

  Ranking ranking;
  if (options.method.kind == ScorerKind::ent) {
    ranking = select_entropy(corpus, options, ref_sorted, budget_lang);
  } else {
    ranking = select_with_matrix(corpus, options, ref_sorted, budget_lang);
  }
  ranking.method = options.method.name;
  ranking.ref_languages = ref_sorted;
  ranking.budget = options.budget;
  ranking.budget_language = budget_lang;
  ranking.corpus_checksum = corpus.checksum();
  return ranking;
}

Ranking select_random(const ParallelCorpus& corpus, uint64_t budget,
                      const std::string& budget_language, uint64_t seed) {
  if (budget == 0) throw Error(Errc::bad_config, "budget must be positive");
  if (!corpus.has_language(budget_language)) {
    throw Error(Errc::unknown_language, budget_language);
  }
  BudgetTracker tracker{&corpus.tokens(budget_language), budget};
  Ranking ranking;
  ranking.method = "rand";
  ranking.seed = seed;
  ranking.budget = budget;
  ranking.budget_language = budget_language;
  ranking.corpus_checksum = corpus.checksum();
  for (uint32_t line : seeded_permutation(corpus.num_lines(), seed)) {
    bool met = tracker.add(line);
    append_entry(&ranking, line, 0.0, tracker.used);
    if (met) return ranking;
  }
  ranking.exhausted = true;
  return ranking;
}

Ranking select_excerpt(const ParallelCorpus& corpus, uint32_t start_line, uint64_t budget,
                       const std::string& budget_language) {
  if (budget == 0) throw Error(Errc::bad_config, "budget must be positive");
  if (start_line >= corpus.num_lines()) {
    throw Error(Errc::unknown_line, std::to_string(start_line));
  }
  if (!corpus.has_language(budget_language)) {
    throw Error(Errc::unknown_language, budget_language);
  }
  BudgetTracker tracker{&corpus.tokens(budget_language), budget};
  Ranking ranking;
  ranking.method = "luke";
  ranking.params = {{"start_line", std::to_string(start_line)}};
  ranking.budget = budget;
  ranking.budget_language = budget_language;
  ranking.corpus_checksum = corpus.checksum();
  for (uint32_t line = start_line; line < corpus.num_lines(); ++line) {
    bool met = tracker.add(line);
    append_entry(&ranking, line, 0.0, tracker.used);
    if (met) return ranking;
  }
  ranking.exhausted = true;
  return ranking;
}

std::string format_ranking(const Ranking& ranking) {
  std::string out;
  out += "#seedsel_ranking=1\n";
  out += "#method=" + ranking.method + "\n";
  if (!ranking.params.empty()) {
    out += "#params=";
    for (size_t i = 0; i < ranking.params.size(); ++i) {
      if (i) out += ",";
      out += ranking.params[i].first + "=" + ranking.params[i].second;
    }
    out += "\n";
  }
  if (!ranking.ref_languages.empty()) {
    out += "#ref_languages=";
    for (size_t i = 0; i < ranking.ref_languages.size(); ++i) {
      if (i) out += ",";
      out += ranking.ref_languages[i];
    }
    out += "\n";
  }
  out += "#budget=" + std::to_string(ranking.budget) + "\n";
  out += "#budget_language=" + ranking.budget_language + "\n";
  out += "#corpus_checksum=" + ranking.corpus_checksum + "\n";
  if (ranking.seed) {
    out += "#rng=splitmix64\n";
    out += "#seed=" + std::to_string(*ranking.seed) + "\n";
  }
  out += "#split=" + format_double(ranking.train_fraction) + "/" +
         format_double(ranking.valid_fraction) + "\n";
  if (ranking.exhausted) out += "#warning=corpus_exhausted\n";
  out += "rank,line_id,score,cum_words\n";
  for (const auto& e : ranking.entries) {
    out += std::to_string(e.rank);
    out += ',';
    out += std::to_string(e.line);
    out += ',';
    out += format_double(e.score);
    out += ',';
    out += std::to_string(e.cum_words);
    out += '\n';
  }
  return out;
}

Ranking parse_ranking(std::string_view text) {
  Ranking ranking;
  size_t pos = 0;
  bool saw_magic = false;
  bool in_rows = false;
  size_t line_no = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!in_rows && line[0] == '#') {
      size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw Error(Errc::parse_error, "ranking header line " + std::to_string(line_no));
      }
      std::string_view key = line.substr(1, eq - 1);
      std::string_view value = line.substr(eq + 1);
      if (key == "seedsel_ranking") {
        saw_magic = true;
      } else if (key == "method") {
        ranking.method = std::string(value);
      } else if (key == "params") {
        size_t p = 0;
        while (p < value.size()) {
          size_t comma = value.find(',', p);
          std::string_view item =
              value.substr(p, comma == std::string_view::npos ? value.size() - p : comma - p);
          size_t ieq = item.find('=');
          if (ieq != std::string_view::npos) {
            ranking.params.emplace_back(std::string(item.substr(0, ieq)),
                                        std::string(item.substr(ieq + 1)));
          }
          p = comma == std::string_view::npos ? value.size() : comma + 1;
        }
      } else if (key == "ref_languages") {
        size_t p = 0;
        while (p < value.size()) {
          size_t comma = value.find(',', p);
          ranking.ref_languages.emplace_back(value.substr(
              p, comma == std::string_view::npos ? value.size() - p : comma - p));
          p = comma == std::string_view::npos ? value.size() : comma + 1;
        }
      } else if (key == "budget") {
        ranking.budget = parse_u64(value, "budget");
      } else if (key == "budget_language") {
        ranking.budget_language = std::string(value);
      } else if (key == "corpus_checksum") {
        ranking.corpus_checksum = std::string(value);
      } else if (key == "seed") {
        ranking.seed = parse_u64(value, "seed");
      } else if (key == "rng") {
        if (value != "splitmix64") {
          throw Error(Errc::parse_error, "unknown rng '" + std::string(value) + "'");
        }
      } else if (key == "split") {
        size_t slash = value.find('/');
        if (slash == std::string_view::npos) throw Error(Errc::parse_error, "split");
        ranking.train_fraction = parse_double(value.substr(0, slash), "split");
        ranking.valid_fraction = parse_double(value.substr(slash + 1), "split");
      } else if (key == "warning") {
        ranking.exhausted = value == "corpus_exhausted";
      } else {
        throw Error(Errc::parse_error, "unknown ranking header key '" + std::string(key) + "'");
      }
      continue;
    }
    if (!in_rows) {
      if (line != "rank,line_id,score,cum_words") {
        throw Error(Errc::parse_error, "expected ranking column header, got '" +
                                           std::string(line) + "'");
      }
      if (!saw_magic) throw Error(Errc::parse_error, "missing #seedsel_ranking header");
      in_rows = true;
      continue;
    }
    auto cols = std::array<std::string_view, 4>{};
    size_t start = 0;
    for (int c = 0; c < 4; ++c) {
      size_t comma = line.find(',', start);
      if (c < 3 && comma == std::string_view::npos) {
        throw Error(Errc::parse_error, "ranking row " + std::to_string(line_no));
      }
      cols[c] = line.substr(start, c < 3 ? comma - start : std::string_view::npos);
      start = comma + 1;
    }
    RankingEntry entry;
    entry.rank = static_cast<uint32_t>(parse_u64(cols[0], "rank"));
    entry.line = static_cast<uint32_t>(parse_u64(cols[1], "line_id"));
    entry.score = parse_double(cols[2], "score");
    entry.cum_words = parse_u64(cols[3], "cum_words");
    ranking.entries.push_back(entry);
  }
  if (!in_rows) throw Error(Errc::parse_error, "not a ranking file");
  return ranking;
}

Ranking load_ranking(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::missing_file, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ranking(buf.str());
}

void write_ranking(const Ranking& ranking, const std::string& path) {
  write_file_atomic(path, format_ranking(ranking));
}

void check_ranking_invariants(const Ranking& ranking) {
  uint64_t prev_words = 0;
  for (size_t i = 0; i < ranking.entries.size(); ++i) {
    const auto& e = ranking.entries[i];
    if (e.rank != i + 1) {
      throw Error(Errc::parse_error, "ranks not contiguous at " + std::to_string(i + 1));
    }
    if (e.cum_words <= prev_words) {
      throw Error(Errc::parse_error, "cumulative words not strictly increasing at rank " +
                                         std::to_string(e.rank));
    }
    // all but the final entry stay under budget
    if (i + 1 < ranking.entries.size() && e.cum_words >= ranking.budget) {
      throw Error(Errc::parse_error, "budget crossed before the final entry");
    }
    prev_words = e.cum_words;
  }
  if (!ranking.exhausted && !ranking.entries.empty() &&
      ranking.entries.back().cum_words < ranking.budget) {
    throw Error(Errc::parse_error, "ranking stopped short of the budget");
  }
}

}  // namespace seedsel
