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

#include <fstream>
#include <sstream>

#include "seedsel/text.hpp"
#include "testutil.hpp"

using namespace seedsel;

TEST_SUITE_BEGIN("text");

TEST_CASE("tokenize basics") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n").empty());
  CHECK(tokenize("a b a") == std::vector<std::string>{"a", "b", "a"});
  CHECK(tokenize("word.") == std::vector<std::string>{"word", "."});
  CHECK(tokenize("(word).") == std::vector<std::string>{"(", "word", ")", "."});
  CHECK(tokenize("don't") == std::vector<std::string>{"don't"});
  CHECK(tokenize("...") == std::vector<std::string>{".", ".", "."});
  CHECK(tokenize("a b") == std::vector<std::string>{"a", "b"});  // nbsp splits
}

TEST_CASE("tokenize matches the hand-tokenized golden lines") {
  std::ifstream lines_in(testutil::fixture_path("tokenizer/frisian_lines.txt"));
  std::ifstream golden_in(testutil::fixture_path("tokenizer/frisian_tokens_golden.tsv"));
  REQUIRE(lines_in.good());
  REQUIRE(golden_in.good());
  std::string line, golden;
  int checked = 0;
  while (std::getline(lines_in, line) && std::getline(golden_in, golden)) {
    std::vector<std::string> expected;
    std::stringstream ss(golden);
    std::string tok;
    while (std::getline(ss, tok, '\t')) expected.push_back(tok);
    CAPTURE(line);
    CHECK(tokenize(line) == expected);
    ++checked;
  }
  CHECK(checked == 10);
}

TEST_CASE("tokenize is pure") {
  const std::string input = "Hy sei: \"Gean nei hûs.\"  — sa,  3,50";
  auto first = tokenize(input);
  for (int i = 0; i < 5; ++i) CHECK(tokenize(input) == first);
}

TEST_CASE("utf8 round trip offsets") {
  std::string s = "aü…b";
  auto off = utf8_offsets(s);
  REQUIRE(off.size() == 5);  // 4 code points + end
  CHECK(off[0] == 0);
  CHECK(off[1] == 1);
  CHECK(off[2] == 3);   // two-byte u-umlaut
  CHECK(off[3] == 6);   // three-byte ellipsis
  CHECK(off[4] == s.size());
}

TEST_CASE("fnv1a64 known value") {
  // reference value of FNV-1a 64 for "a"
  CHECK(to_hex(fnv1a64("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("format_double round trips") {
  for (double v : {0.0, 1.5, 7.0 / 3.0, 1e-9, 123456.75}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.5) == "1.5");
}

TEST_SUITE_END();
