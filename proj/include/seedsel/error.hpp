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

#ifndef SEEDSEL_ERROR_HPP_
#define SEEDSEL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace seedsel {

enum class Errc {
  missing_file,
  alignment_mismatch,
  duplicate_line_id,
  unknown_language,
  empty_span,
  unknown_span,
  order_exceeds_table,
  empty_training_set,
  line_in_chosen_set,
  unknown_line,
  unknown_policy,
  insufficient_metadata,
  missing_row,
  length_mismatch,
  empty_candidate_list,
  corpus_mismatch,
  invalid_schedule,
  bad_config,
  io_error,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace seedsel

#endif  // SEEDSEL_ERROR_HPP_
