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

#ifndef SEEDSEL_TEXT_HPP_
#define SEEDSEL_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seedsel {

// Decodes one UTF-8 code point starting at byte offset `pos` and advances
// `pos` past it. Malformed bytes are consumed one at a time and returned
// as their byte value, so decoding never fails and never stalls.
char32_t utf8_next(std::string_view text, size_t* pos);

// Byte offsets of every code point start, plus a final entry at text.size().
std::vector<uint32_t> utf8_offsets(std::string_view text);

bool is_space_cp(char32_t cp);
bool is_punct_cp(char32_t cp);

// Word tokenizer used for all word counts and n-gram extraction:
// split on Unicode whitespace, then detach leading/trailing punctuation
// code points of each chunk as single-character tokens. Chunks made of
// punctuation only fall apart into one token per code point. Pure and
// locale-independent.
std::vector<std::string> tokenize(std::string_view text);

// Strips every whitespace code point; used by character-level metrics.
std::string strip_whitespace(std::string_view text);

uint64_t fnv1a64(std::string_view bytes, uint64_t state = 0xcbf29ce484222325ull);
std::string to_hex(uint64_t value);

// Shortest round-trip decimal form via std::to_chars; byte-stable across
// platforms for identical doubles.
std::string format_double(double value);

// Writes to <path>.tmp then renames, so readers never see partial output.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace seedsel

#endif  // SEEDSEL_TEXT_HPP_
