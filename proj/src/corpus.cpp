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

#include "seedsel/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "seedsel/error.hpp"
#include "seedsel/text.hpp"

namespace fs = std::filesystem;

namespace seedsel {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::missing_file, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string blob = read_file(path);
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < blob.size()) {
    size_t nl = blob.find('\n', pos);
    size_t end = (nl == std::string::npos) ? blob.size() : nl;
    size_t len = end - pos;
    if (len > 0 && blob[pos + len - 1] == '\r') --len;
    lines.emplace_back(blob, pos, len);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return lines;
}

uint64_t parse_u64(std::string_view s, const std::string& what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, what + ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      break;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

LanguageSet LanguageSet::load(const std::string& path) {
  std::vector<Language> rows;
  auto lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    if (i == 0 && line.rfind("code,", 0) == 0) continue;  // optional header
    auto cols = split(line, ',');
    if (cols.size() != 6) {
      throw Error(Errc::parse_error,
                  path + ":" + std::to_string(i + 1) + ": expected 6 columns");
    }
    Language lang;
    lang.code = cols[0];
    lang.name = cols[1];
    lang.family = cols[2];
    lang.speakers = parse_u64(cols[3], path + " speakers");
    lang.resource_level = static_cast<int>(parse_u64(cols[4], path + " resource_level"));
    if (lang.resource_level > 5) {
      throw Error(Errc::parse_error, path + ": resource_level out of [0,5] for " + lang.code);
    }
    if (!cols[5].empty()) {
      for (auto& n : split(cols[5], ';')) {
        if (!n.empty()) lang.neighbors.push_back(n);
      }
    }
    rows.push_back(std::move(lang));
  }
  return from_rows(std::move(rows));
}

LanguageSet LanguageSet::from_rows(std::vector<Language> rows) {
  LanguageSet set;
  set.languages_ = std::move(rows);
  for (size_t i = 0; i < set.languages_.size(); ++i) {
    auto [it, inserted] = set.by_code_.emplace(set.languages_[i].code, i);
    if (!inserted) {
      throw Error(Errc::parse_error, "duplicate language code: " + set.languages_[i].code);
    }
  }
  for (const auto& lang : set.languages_) {
    for (const auto& n : lang.neighbors) {
      if (!set.by_code_.count(n)) {
        throw Error(Errc::parse_error,
                    "language " + lang.code + " names unknown neighbor " + n);
      }
    }
  }
  return set;
}

const Language* LanguageSet::find(std::string_view code) const {
  auto it = by_code_.find(std::string(code));
  return it == by_code_.end() ? nullptr : &languages_[it->second];
}

const Language& LanguageSet::at(std::string_view code) const {
  const Language* lang = find(code);
  if (!lang) throw Error(Errc::unknown_language, std::string(code));
  return *lang;
}

NeLexicon NeLexicon::load(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) throw Error(Errc::parse_error, path + ": empty lexicon");
  std::vector<std::string> languages = split(lines[0], '\t');
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto cols = split(lines[i], '\t');
    if (cols.size() != languages.size()) {
      throw Error(Errc::parse_error,
                  path + ":" + std::to_string(i + 1) + ": column count mismatch");
    }
    rows.push_back(std::move(cols));
  }
  return from_rows(std::move(languages), std::move(rows));
}

NeLexicon NeLexicon::from_rows(std::vector<std::string> languages,
                               std::vector<std::vector<std::string>> rows) {
  NeLexicon lex;
  lex.languages_ = std::move(languages);
  lex.rows_ = std::move(rows);
  lex.tokenized_.resize(lex.languages_.size());
  for (size_t l = 0; l < lex.languages_.size(); ++l) {
    lex.tokenized_[l].reserve(lex.rows_.size());
    for (const auto& row : lex.rows_) {
      lex.tokenized_[l].push_back(tokenize(row[l]));
    }
  }
  return lex;
}

const std::vector<std::vector<std::string>>& NeLexicon::forms(std::string_view lang) const {
  for (size_t l = 0; l < languages_.size(); ++l) {
    if (languages_[l] == lang) return tokenized_[l];
  }
  throw Error(Errc::unknown_language, std::string(lang) + " not in lexicon");
}

MaskedLine mask_named_entities(const TokenizedLine& line, const NeLexicon& lexicon,
                               std::string_view lang) {
  const auto& forms = lexicon.forms(lang);
  // first token -> candidate forms, longest first
  std::unordered_map<std::string_view, std::vector<const std::vector<std::string>*>> heads;
  for (const auto& form : forms) {
    if (!form.empty()) heads[form[0]].push_back(&form);
  }
  for (auto& [head, list] : heads) {
    std::stable_sort(list.begin(), list.end(),
                     [](const auto* a, const auto* b) { return a->size() > b->size(); });
  }

  MaskedLine out;
  out.line.line = line.line;
  size_t i = 0;
  while (i < line.tokens.size()) {
    const std::vector<std::string>* match = nullptr;
    auto it = heads.find(line.tokens[i]);
    if (it != heads.end()) {
      for (const auto* form : it->second) {
        if (i + form->size() > line.tokens.size()) continue;
        if (std::equal(form->begin(), form->end(), line.tokens.begin() + i)) {
          match = form;
          break;
        }
      }
    }
    if (match) {
      size_t k = out.entities.size();
      out.line.tokens.push_back("__NE" + std::to_string(k));
      out.entities.emplace_back(line.tokens.begin() + i,
                                line.tokens.begin() + i + match->size());
      i += match->size();
    } else {
      out.line.tokens.push_back(line.tokens[i]);
      ++i;
    }
  }
  return out;
}

TokenizedLine unmask_named_entities(const MaskedLine& masked) {
  TokenizedLine out;
  out.line = masked.line.line;
  for (const auto& token : masked.line.tokens) {
    if (token.rfind("__NE", 0) == 0) {
      uint64_t k = 0;
      auto [ptr, ec] = std::from_chars(token.data() + 4, token.data() + token.size(), k);
      if (ec == std::errc{} && ptr == token.data() + token.size() &&
          k < masked.entities.size()) {
        const auto& span = masked.entities[k];
        out.tokens.insert(out.tokens.end(), span.begin(), span.end());
        continue;
      }
    }
    out.tokens.push_back(token);
  }
  return out;
}

ParallelCorpus ParallelCorpus::load(const std::string& manifest_path) {
  auto manifest = read_lines(manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  ParallelCorpus corpus;
  std::string ids_path, meta_path, nelex_path;
  for (size_t i = 0; i < manifest.size(); ++i) {
    const std::string& line = manifest[i];
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    auto where = manifest_path + ":" + std::to_string(i + 1);
    if (key == "lang") {
      std::string code, path;
      if (!(ss >> code >> path)) throw Error(Errc::parse_error, where + ": lang <code> <path>");
      if (corpus.index_.count(code)) {
        throw Error(Errc::parse_error, where + ": duplicate language " + code);
      }
      corpus.index_.emplace(code, corpus.codes_.size());
      corpus.codes_.push_back(code);
      corpus.raw_.push_back(read_lines(resolve(path)));
    } else if (key == "ids") {
      if (!(ss >> ids_path)) throw Error(Errc::parse_error, where + ": ids <path>");
    } else if (key == "meta") {
      if (!(ss >> meta_path)) throw Error(Errc::parse_error, where + ": meta <path>");
    } else if (key == "nelex") {
      if (!(ss >> nelex_path)) throw Error(Errc::parse_error, where + ": nelex <path>");
    } else if (key == "span") {
      std::string name;
      uint32_t begin = 0, end = 0;
      if (!(ss >> name >> begin >> end) || begin > end) {
        throw Error(Errc::parse_error, where + ": span <name> <begin> <end>");
      }
      corpus.spans_[name] = LineSpan{begin, end};
    } else {
      throw Error(Errc::parse_error, where + ": unknown key '" + key + "'");
    }
  }
  if (corpus.codes_.empty()) {
    throw Error(Errc::parse_error, manifest_path + ": no languages");
  }

  corpus.num_lines_ = static_cast<uint32_t>(corpus.raw_[0].size());
  for (size_t l = 1; l < corpus.codes_.size(); ++l) {
    if (corpus.raw_[l].size() != corpus.num_lines_) {
      throw Error(Errc::alignment_mismatch,
                  corpus.codes_[l] + ": expected " + std::to_string(corpus.num_lines_) +
                      " lines, got " + std::to_string(corpus.raw_[l].size()));
    }
  }

  if (!ids_path.empty()) {
    corpus.line_ids_ = read_lines(resolve(ids_path));
    if (corpus.line_ids_.size() != corpus.num_lines_) {
      throw Error(Errc::alignment_mismatch,
                  "ids: expected " + std::to_string(corpus.num_lines_) + " lines, got " +
                      std::to_string(corpus.line_ids_.size()));
    }
    std::unordered_map<std::string, uint32_t> seen;
    for (uint32_t i = 0; i < corpus.line_ids_.size(); ++i) {
      auto [it, inserted] = seen.emplace(corpus.line_ids_[i], i);
      if (!inserted) {
        throw Error(Errc::duplicate_line_id,
                    corpus.line_ids_[i] + " at lines " + std::to_string(it->second) +
                        " and " + std::to_string(i));
      }
    }
  }
  for (const auto& [name, span] : corpus.spans_) {
    if (span.end > corpus.num_lines_) {
      throw Error(Errc::parse_error, "span " + name + " exceeds corpus size");
    }
  }
  if (!meta_path.empty()) corpus.metadata_ = LanguageSet::load(resolve(meta_path));
  if (!nelex_path.empty()) corpus.lexicon_ = NeLexicon::load(resolve(nelex_path));
  corpus.finalize();
  return corpus;
}

ParallelCorpus ParallelCorpus::from_lines(
    std::vector<std::pair<std::string, std::vector<std::string>>> lang_lines) {
  ParallelCorpus corpus;
  for (auto& [code, lines] : lang_lines) {
    if (corpus.index_.count(code)) {
      throw Error(Errc::parse_error, "duplicate language " + code);
    }
    corpus.index_.emplace(code, corpus.codes_.size());
    corpus.codes_.push_back(code);
    corpus.raw_.push_back(std::move(lines));
  }
  if (corpus.codes_.empty()) throw Error(Errc::parse_error, "no languages");
  corpus.num_lines_ = static_cast<uint32_t>(corpus.raw_[0].size());
  for (size_t l = 1; l < corpus.codes_.size(); ++l) {
    if (corpus.raw_[l].size() != corpus.num_lines_) {
      throw Error(Errc::alignment_mismatch,
                  corpus.codes_[l] + ": expected " + std::to_string(corpus.num_lines_) +
                      " lines, got " + std::to_string(corpus.raw_[l].size()));
    }
  }
  corpus.finalize();
  return corpus;
}

void ParallelCorpus::finalize() {
  if (line_ids_.empty()) {
    line_ids_.reserve(num_lines_);
    for (uint32_t i = 0; i < num_lines_; ++i) line_ids_.push_back(std::to_string(i));
  }
  tokens_.resize(codes_.size());
  for (size_t l = 0; l < codes_.size(); ++l) {
    tokens_[l].reserve(num_lines_);
    for (const auto& raw : raw_[l]) tokens_[l].push_back(tokenize(raw));
  }
  // checksum over languages in sorted code order so it is independent of
  // manifest ordering
  std::vector<size_t> order(codes_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return codes_[a] < codes_[b]; });
  uint64_t h = fnv1a64("");
  for (size_t l : order) {
    h = fnv1a64(codes_[l], h);
    h = fnv1a64("\n", h);
    for (const auto& raw : raw_[l]) {
      h = fnv1a64(raw, h);
      h = fnv1a64("\n", h);
    }
  }
  checksum_ = to_hex(h);
}

size_t ParallelCorpus::lang_index(std::string_view code) const {
  auto it = index_.find(std::string(code));
  if (it == index_.end()) throw Error(Errc::unknown_language, std::string(code));
  return it->second;
}

bool ParallelCorpus::has_language(std::string_view code) const {
  return index_.count(std::string(code)) > 0;
}

const std::vector<std::string>& ParallelCorpus::raw_lines(std::string_view code) const {
  return raw_[lang_index(code)];
}

const std::vector<std::vector<std::string>>& ParallelCorpus::tokens(
    std::string_view code) const {
  return tokens_[lang_index(code)];
}

TokenizedLine ParallelCorpus::tokenized_line(std::string_view code, uint32_t line) const {
  if (line >= num_lines_) throw Error(Errc::unknown_line, std::to_string(line));
  return TokenizedLine{line, tokens_[lang_index(code)][line]};
}

uint32_t ParallelCorpus::line_tokens(std::string_view code, uint32_t line) const {
  if (line >= num_lines_) throw Error(Errc::unknown_line, std::to_string(line));
  return static_cast<uint32_t>(tokens_[lang_index(code)][line].size());
}

std::string ParallelCorpus::line_id_checksum() const {
  uint64_t h = fnv1a64("");
  for (const auto& id : line_ids_) {
    h = fnv1a64(id, h);
    h = fnv1a64("\n", h);
  }
  return to_hex(h);
}

LineSpan ParallelCorpus::span(std::string_view name) const {
  auto it = spans_.find(std::string(name));
  if (it == spans_.end()) throw Error(Errc::unknown_span, std::string(name));
  return it->second;
}

uint64_t word_budget(const ParallelCorpus& corpus, std::string_view lang, LineSpan span) {
  if (span.begin > span.end || span.end > corpus.num_lines()) {
    throw Error(Errc::empty_span, "span [" + std::to_string(span.begin) + "," +
                                      std::to_string(span.end) + ") out of range");
  }
  const auto& tokens = corpus.tokens(lang);
  uint64_t total = 0;
  for (uint32_t i = span.begin; i < span.end; ++i) total += tokens[i].size();
  return total;
}

}  // namespace seedsel
