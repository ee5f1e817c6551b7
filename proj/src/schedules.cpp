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

#include "seedsel/schedules.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "seedsel/error.hpp"

namespace seedsel {

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::m2m100: return "m2m100";
    case Stage::nxn: return "n_x_n";
    case Stage::np1xnp1: return "np1_x_np1";
    case Stage::np1to1: return "np1_to_1";
    case Stage::autoencoder: return "autoencoder";
  }
  return "?";
}

const char* stage_direction(Stage stage) {
  switch (stage) {
    case Stage::m2m100: return "many-to-many";
    case Stage::nxn: return "NxN";
    case Stage::np1xnp1: return "(N+1)x(N+1)";
    case Stage::np1to1: return "(N+1)x1";
    case Stage::autoencoder: return "1x1";
  }
  return "?";
}

namespace {

Stage stage_from_name(std::string_view name) {
  for (Stage s : {Stage::m2m100, Stage::nxn, Stage::np1xnp1, Stage::np1to1,
                  Stage::autoencoder}) {
    if (name == stage_name(s)) return s;
  }
  throw Error(Errc::parse_error, "unknown stage '" + std::string(name) + "'");
}

std::vector<Schedule> build_schedules() {
  std::vector<Schedule> schedules;
  const Stage later[4] = {Stage::nxn, Stage::np1xnp1, Stage::np1to1, Stage::autoencoder};
  // A-H: the N-source model plus every subset of the three later stages,
  // listed with the fuller columns first.
  for (int i = 0; i < 8; ++i) {
    Schedule s;
    s.label = static_cast<char>('A' + i);
    s.uses_pretrained = false;
    s.stages.push_back(Stage::nxn);
    int mask = 7 - i;  // bit2 = np1xnp1, bit1 = np1to1, bit0 = autoencoder
    if (mask & 4) s.stages.push_back(Stage::np1xnp1);
    if (mask & 2) s.stages.push_back(Stage::np1to1);
    if (mask & 1) s.stages.push_back(Stage::autoencoder);
    schedules.push_back(std::move(s));
  }
  // I-X: the external checkpoint plus every subset of the four trained
  // stages, same ordering convention.
  for (int i = 0; i < 16; ++i) {
    Schedule s;
    s.label = static_cast<char>('I' + i);
    s.uses_pretrained = true;
    s.stages.push_back(Stage::m2m100);
    int mask = 15 - i;  // bit3 = nxn ... bit0 = autoencoder
    for (int b = 3; b >= 0; --b) {
      if (mask & (1 << b)) s.stages.push_back(later[3 - b]);
    }
    schedules.push_back(std::move(s));
  }
  return schedules;
}

}  // namespace

const std::vector<Schedule>& enumerate_schedules() {
  static const std::vector<Schedule> schedules = build_schedules();
  return schedules;
}

const Schedule& schedule_by_label(char label) {
  for (const auto& s : enumerate_schedules()) {
    if (s.label == label) return s;
  }
  throw Error(Errc::invalid_schedule,
              std::string("no schedule '") + label + "'; valid labels are A..X");
}

ScheduleViolation validate_schedule(std::span<const Stage> stages) {
  ScheduleViolation v;
  bool pretrained = false;
  for (Stage s : stages) {
    if (s == Stage::m2m100 || s == Stage::nxn) pretrained = true;
  }
  if (!pretrained) {
    v.kind = ScheduleViolation::no_pretraining;
    v.detail = "schedule must start from m2m100 or n_x_n";
    return v;
  }
  for (size_t i = 1; i < stages.size(); ++i) {
    if (static_cast<int>(stages[i]) == static_cast<int>(stages[i - 1])) {
      v.kind = ScheduleViolation::duplicate_stage;
      v.detail = std::string("stage ") + stage_name(stages[i]) + " repeats";
      return v;
    }
    if (static_cast<int>(stages[i]) < static_cast<int>(stages[i - 1])) {
      v.kind = ScheduleViolation::stage_order;
      v.detail = std::string(stage_name(stages[i])) + " cannot follow " +
                 stage_name(stages[i - 1]);
      return v;
    }
  }
  return v;
}

namespace {

struct StagePlan {
  const char* split;
  const char* patience;
  const char* update_interval;
  const char* min_steps;
};

StagePlan plan_for(Stage stage) {
  switch (stage) {
    case Stage::m2m100:
      return {"-", "-", "-", "-"};
    case Stage::nxn:
      return {"80/10/10", "5", "1000", "190000"};
    case Stage::np1xnp1:
      return {"3.0/0.2/96.8", "5", "200", "-"};
    case Stage::np1to1:
    case Stage::autoencoder:
      return {"3.0/0.2/96.8", "25", "50", "-"};
  }
  return {"-", "-", "-", "-"};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string stage_languages(Stage stage, const ScheduleConfig& config) {
  switch (stage) {
    case Stage::m2m100:
      return "-";
    case Stage::nxn:
      return join(config.sources);
    case Stage::np1xnp1:
    case Stage::np1to1: {
      std::vector<std::string> all = config.sources;
      all.push_back(config.target);
      return join(all);
    }
    case Stage::autoencoder:
      return config.target;
  }
  return "-";
}

}  // namespace

std::string emit_manifest(const Schedule& schedule, const ScheduleConfig& config) {
  ScheduleViolation v = validate_schedule(schedule.stages);
  if (v.kind != ScheduleViolation::ok) throw Error(Errc::invalid_schedule, v.detail);
  std::ostringstream out;
  out << "#seedsel_schedule_manifest=1\n";
  out << "schedule=" << schedule.label << "\n";
  out << "uses_pretrained=" << (schedule.uses_pretrained ? "true" : "false") << "\n";
  out << "target=" << config.target << "\n";
  out << "sources=" << join(config.sources) << "\n";
  out << "seed_ranking=" << config.seed_ranking << "\n";
  out << "bpe_target=" << config.bpe_target << "\n";
  out << "bpe_combined=" << config.bpe_combined << "\n";
  out << "stages=" << schedule.stages.size() << "\n";
  for (size_t i = 0; i < schedule.stages.size(); ++i) {
    Stage stage = schedule.stages[i];
    StagePlan plan = plan_for(stage);
    out << "[stage " << (i + 1) << "]\n";
    out << "unit=" << stage_name(stage) << "\n";
    out << "direction=" << stage_direction(stage) << "\n";
    out << "languages=" << stage_languages(stage, config) << "\n";
    out << "split=" << plan.split << "\n";
    out << "patience=" << plan.patience << "\n";
    out << "update_interval=" << plan.update_interval << "\n";
    out << "min_steps=" << plan.min_steps << "\n";
  }
  out << "[model]\n";
  out << "encoder_layers=6\n";
  out << "decoder_layers=6\n";
  out << "hidden_size=512\n";
  out << "attention_heads=8\n";
  out << "word_vec_size=512\n";
  out << "feed_forward_size=2048\n";
  out << "[optimizer]\n";
  out << "batch_size=6000\n";
  out << "label_smoothing=0.1\n";
  out << "learning_rate=2.5\n";
  out << "finetune_learning_rate=1.0\n";
  out << "dropout=0.1\n";
  out << "attention_dropout=0.1\n";
  out << "optimizer=adam\n";
  out << "decay_method=noam\n";
  return out.str();
}

ParsedManifest parse_manifest(std::string_view text) {
  ParsedManifest parsed;
  std::vector<Stage> stages;
  bool saw_magic = false;
  char label = '?';
  bool uses_pretrained = false;
  size_t pos = 0;
  std::string section;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = std::string(line);
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parse_error, "manifest line '" + std::string(line) + "'");
    }
    std::string_view key = line.substr(0, eq);
    std::string_view value = line.substr(eq + 1);
    if (key == "#seedsel_schedule_manifest") {
      saw_magic = true;
    } else if (key == "schedule") {
      if (value.size() != 1) throw Error(Errc::parse_error, "schedule label");
      label = value[0];
    } else if (key == "uses_pretrained") {
      uses_pretrained = value == "true";
    } else if (key == "target") {
      parsed.config.target = std::string(value);
    } else if (key == "sources") {
      size_t p = 0;
      while (p < value.size()) {
        size_t comma = value.find(',', p);
        parsed.config.sources.emplace_back(
            value.substr(p, comma == std::string_view::npos ? value.size() - p : comma - p));
        p = comma == std::string_view::npos ? value.size() : comma + 1;
      }
    } else if (key == "seed_ranking") {
      parsed.config.seed_ranking = std::string(value);
    } else if (key == "bpe_target") {
      parsed.config.bpe_target = std::stoi(std::string(value));
    } else if (key == "bpe_combined") {
      parsed.config.bpe_combined = std::stoi(std::string(value));
    } else if (key == "unit") {
      stages.push_back(stage_from_name(value));
    }
    // remaining keys are fixed settings replayed by emit_manifest
  }
  if (!saw_magic) throw Error(Errc::parse_error, "not a schedule manifest");
  parsed.schedule.label = label;
  parsed.schedule.stages = std::move(stages);
  parsed.schedule.uses_pretrained = uses_pretrained;
  ScheduleViolation v = validate_schedule(parsed.schedule.stages);
  if (v.kind != ScheduleViolation::ok) throw Error(Errc::invalid_schedule, v.detail);
  return parsed;
}

}  // namespace seedsel
