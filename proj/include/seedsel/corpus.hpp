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

#ifndef SEEDSEL_CORPUS_HPP_
#define SEEDSEL_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seedsel {

struct Language {
  std::string code;
  std::string name;
  std::string family;
  uint64_t speakers = 0;
  int resource_level = 0;
  std::vector<std::string> neighbors;
};

// Language metadata loaded from a delimited text file with columns
// code,name,family,speakers,resource_level,neighbors (neighbors separated
// by ';'). Codes are unique; neighbor references must resolve.
class LanguageSet {
 public:
  static LanguageSet load(const std::string& path);
  static LanguageSet from_rows(std::vector<Language> rows);

  const Language* find(std::string_view code) const;
  const Language& at(std::string_view code) const;  // throws UnknownLanguage
  const std::vector<Language>& all() const { return languages_; }
  bool empty() const { return languages_.empty(); }

 private:
  std::vector<Language> languages_;
  std::unordered_map<std::string, size_t> by_code_;
};

struct TokenizedLine {
  uint32_t line = 0;
  std::vector<std::string> tokens;
  size_t length() const { return tokens.size(); }
  bool operator==(const TokenizedLine&) const = default;
};

// Half-open range of line indices.
struct LineSpan {
  uint32_t begin = 0;
  uint32_t end = 0;
  uint32_t size() const { return end - begin; }
};

// Parallel multilingual lexicon of named entities: one row per entity, one
// column per language. Matching is exact on token spans, longest match first.
class NeLexicon {
 public:
  static NeLexicon load(const std::string& path);
  static NeLexicon from_rows(std::vector<std::string> languages,
                             std::vector<std::vector<std::string>> rows);

  size_t num_entries() const { return rows_.size(); }
  const std::vector<std::string>& languages() const { return languages_; }
  // Entity surface forms of one language, tokenized, aligned with rows.
  const std::vector<std::vector<std::string>>& forms(std::string_view lang) const;

 private:
  std::vector<std::string> languages_;
  std::vector<std::vector<std::string>> rows_;  // row-major surface strings
  // per language: tokenized forms, index-aligned with rows_
  std::vector<std::vector<std::vector<std::string>>> tokenized_;
};

struct MaskedLine {
  TokenizedLine line;
  // ordinal k -> original token span replaced by the k-th __NE token
  std::vector<std::vector<std::string>> entities;
};

// Replaces entity token spans by ordered __NE0, __NE1, ... left to right,
// longest match first. No matches returns the line unchanged.
MaskedLine mask_named_entities(const TokenizedLine& line, const NeLexicon& lexicon,
                               std::string_view lang);
TokenizedLine unmask_named_entities(const MaskedLine& masked);

// Line-aligned multilingual corpus. Every language holds exactly the same
// number of lines; line ids are zero-based positions, optionally labelled
// through a sidecar id file. Immutable once constructed.
class ParallelCorpus {
 public:
  // Manifest format (whitespace-delimited keys, paths relative to the
  // manifest): lang <code> <path> / ids <path> / meta <path> /
  // nelex <path> / span <name> <begin> <end>.
  static ParallelCorpus load(const std::string& manifest_path);
  static ParallelCorpus from_lines(
      std::vector<std::pair<std::string, std::vector<std::string>>> lang_lines);

  uint32_t num_lines() const { return num_lines_; }
  const std::vector<std::string>& languages() const { return codes_; }
  bool has_language(std::string_view code) const;

  const std::vector<std::string>& raw_lines(std::string_view code) const;
  const std::vector<std::vector<std::string>>& tokens(std::string_view code) const;
  TokenizedLine tokenized_line(std::string_view code, uint32_t line) const;
  uint32_t line_tokens(std::string_view code, uint32_t line) const;

  // Sidecar labels when provided, otherwise decimal positions.
  const std::vector<std::string>& line_ids() const { return line_ids_; }

  // FNV-1a over languages in sorted code order: code, '\n', then each raw
  // line + '\n'. Hex; pinned in ranking headers.
  const std::string& checksum() const { return checksum_; }
  std::string line_id_checksum() const;

  const std::map<std::string, LineSpan>& spans() const { return spans_; }
  LineSpan span(std::string_view name) const;  // throws UnknownSpan

  const LanguageSet* metadata() const { return metadata_ ? &*metadata_ : nullptr; }
  const NeLexicon* ne_lexicon() const { return lexicon_ ? &*lexicon_ : nullptr; }

 private:
  void finalize();
  size_t lang_index(std::string_view code) const;  // throws UnknownLanguage

  std::vector<std::string> codes_;
  std::vector<std::vector<std::string>> raw_;                 // [lang][line]
  std::vector<std::vector<std::vector<std::string>>> tokens_; // [lang][line][tok]
  std::vector<std::string> line_ids_;
  std::map<std::string, LineSpan> spans_;
  std::optional<LanguageSet> metadata_;
  std::optional<NeLexicon> lexicon_;
  std::unordered_map<std::string, size_t> index_;
  std::string checksum_;
  uint32_t num_lines_ = 0;
};

// Total token count of `lang` over the span. A zero-length span counts 0;
// an out-of-range span is an EmptySpan error.
uint64_t word_budget(const ParallelCorpus& corpus, std::string_view lang, LineSpan span);

}  // namespace seedsel

#endif  // SEEDSEL_CORPUS_HPP_
