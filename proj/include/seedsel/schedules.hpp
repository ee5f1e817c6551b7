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

#ifndef SEEDSEL_SCHEDULES_HPP_
#define SEEDSEL_SCHEDULES_HPP_

#include <span>
#include <string>
#include <vector>

namespace seedsel {

// The five training units, in their fixed pipeline order: the external
// pretrained many-to-many model, the N-source multilingual model, the same
// grown by the target language, the into-target model, and the target
// autoencoder.
enum class Stage { m2m100, nxn, np1xnp1, np1to1, autoencoder };

const char* stage_name(Stage stage);      // manifest unit token
const char* stage_direction(Stage stage);

struct Schedule {
  char label = '?';  // A..X
  std::vector<Stage> stages;
  bool uses_pretrained = false;  // starts from the external checkpoint

  bool operator==(const Schedule&) const = default;
};

// All 24 schedules in label order: A-H start from the N-source model and
// take every subset of the later stages; I-X start from the external
// checkpoint and take every subset of the remaining four.
const std::vector<Schedule>& enumerate_schedules();
const Schedule& schedule_by_label(char label);  // throws InvalidSchedule

struct ScheduleViolation {
  enum Kind { ok, no_pretraining, stage_order, duplicate_stage } kind = ok;
  std::string detail;
};

// A valid stage list is ordered, duplicate-free, and starts from one of the
// two pretraining units. Never throws.
ScheduleViolation validate_schedule(std::span<const Stage> stages);

struct ScheduleConfig {
  std::string target;
  std::vector<std::string> sources;
  std::string seed_ranking = "-";  // path of the seed-corpus ranking, "-" if none
  int bpe_target = 3000;
  int bpe_combined = 9000;
};

// Key/value manifest with one block per stage plus the fixed model and
// optimizer settings; field order is stable so manifests diff cleanly.
std::string emit_manifest(const Schedule& schedule, const ScheduleConfig& config);

struct ParsedManifest {
  Schedule schedule;
  ScheduleConfig config;
};

ParsedManifest parse_manifest(std::string_view text);

}  // namespace seedsel

#endif  // SEEDSEL_SCHEDULES_HPP_
