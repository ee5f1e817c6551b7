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

#include "seedsel/error.hpp"

namespace seedsel {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::missing_file: return "MissingFile";
    case Errc::alignment_mismatch: return "AlignmentMismatch";
    case Errc::duplicate_line_id: return "DuplicateLineId";
    case Errc::unknown_language: return "UnknownLanguage";
    case Errc::empty_span: return "EmptySpan";
    case Errc::unknown_span: return "UnknownSpan";
    case Errc::order_exceeds_table: return "OrderExceedsTable";
    case Errc::empty_training_set: return "EmptyTrainingSet";
    case Errc::line_in_chosen_set: return "LineInChosenSet";
    case Errc::unknown_line: return "UnknownLine";
    case Errc::unknown_policy: return "UnknownPolicy";
    case Errc::insufficient_metadata: return "InsufficientMetadata";
    case Errc::missing_row: return "MissingRow";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_candidate_list: return "EmptyCandidateList";
    case Errc::corpus_mismatch: return "CorpusMismatch";
    case Errc::invalid_schedule: return "InvalidSchedule";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace seedsel
