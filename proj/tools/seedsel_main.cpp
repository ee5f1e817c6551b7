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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "seedsel/aggregation.hpp"
#include "seedsel/corpus.hpp"
#include "seedsel/error.hpp"
#include "seedsel/evaluation.hpp"
#include "seedsel/schedules.hpp"
#include "seedsel/selection.hpp"
#include "seedsel/text.hpp"

namespace {

using namespace seedsel;

std::vector<std::string> read_all_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::missing_file, path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct SelectArgs {
  std::string corpus_path;
  std::string method;
  int order = 0;
  std::vector<std::string> ref_langs;
  std::string metadata_path;
  std::string target;
  int pool_k = 10;
  uint64_t budget_words = 0;
  std::string budget_span;
  std::string budget_lang;
  uint64_t seed = 0;
  int start_line = -1;
  std::string engine = "memo";
  int jobs = 1;
  std::string out;
};

const LanguageSet* metadata_or_throw(const ParallelCorpus& corpus, const std::string& path,
                                     std::optional<LanguageSet>* storage) {
  if (!path.empty()) {
    *storage = LanguageSet::load(path);
    return &**storage;
  }
  if (corpus.metadata()) return corpus.metadata();
  throw Error(Errc::insufficient_metadata,
              "aggregation needs --metadata or a manifest meta entry");
}

int run_select(const SelectArgs& args) {
  ParallelCorpus corpus = ParallelCorpus::load(args.corpus_path);

  // budget: explicit words, or a named span counted in the budget language
  auto resolve_budget = [&](const std::string& lang) -> uint64_t {
    if (args.budget_words > 0) return args.budget_words;
    if (!args.budget_span.empty()) {
      uint64_t words = word_budget(corpus, lang, corpus.span(args.budget_span));
      if (words == 0) throw Error(Errc::empty_span, args.budget_span + " has no words");
      return words;
    }
    throw Error(Errc::bad_config, "need --budget-words or --budget-span");
  };
  auto fallback_lang = [&]() -> std::string {
    if (!args.budget_lang.empty()) return args.budget_lang;
    if (!args.ref_langs.empty()) return args.ref_langs[0];
    return corpus.languages()[0];
  };

  const std::string& m = args.method;
  Ranking ranking;
  std::optional<LanguageSet> meta_storage;
  std::vector<std::pair<std::string, std::string>> pool_params;

  if (m == "luke") {
    std::string lang = fallback_lang();
    std::string span_name = args.budget_span.empty() ? "luke" : args.budget_span;
    LineSpan span = corpus.span(span_name);
    uint32_t start = args.start_line >= 0 ? static_cast<uint32_t>(args.start_line) : span.begin;
    uint64_t budget =
        args.budget_words > 0 ? args.budget_words : word_budget(corpus, lang, span);
    if (budget == 0) throw Error(Errc::empty_span, span_name + " has no words");
    ranking = select_excerpt(corpus, start, budget, lang);
  } else if (m == "rand") {
    std::string lang = fallback_lang();
    ranking = select_random(corpus, resolve_budget(lang), lang, args.seed);
  } else {
    SelectionOptions options;
    options.engine = args.engine == "naive" ? Engine::naive : Engine::memoized;
    options.jobs = args.jobs;
    MethodSpec& spec = options.method;

    if (m == "s") {
      spec.kind = ScorerKind::s;
      spec.order = 1;
      spec.name = "s";
    } else if (m == "sn") {
      spec.kind = ScorerKind::sn;
      spec.order = 1;
      spec.name = "sn";
    } else if (m == "sng" || (m.size() == 4 && m.rfind("sng", 0) == 0 &&
                              isdigit(static_cast<unsigned char>(m[3])))) {
      int order = m == "sng" ? args.order : m[3] - '0';
      if (m == "sng" && args.order == 0) {
        throw Error(Errc::bad_config, "--method sng needs --order");
      }
      if (order < 1 || order > 8) throw Error(Errc::bad_config, "sng order must be in [1,8]");
      spec.kind = ScorerKind::sng;
      spec.order = order;
      spec.name = "sng" + std::to_string(order);
    } else if (m == "entN" || m == "entK") {
      spec.kind = ScorerKind::ent;
      spec.name = m;
      spec.ent.side_order = 2;
      spec.ent.chosen_order = m == "entK" ? 5 : 2;
      if (args.order > 0) spec.ent.chosen_order = args.order;
    } else if (m == "aggL" || m == "aggF" || m == "aggP" || m == "aggN") {
      spec.kind = ScorerKind::sng;
      spec.order = args.order > 0 ? args.order : 5;
      spec.name = m + std::to_string(spec.order);
      if (args.target.empty()) {
        throw Error(Errc::bad_config, "aggregation methods need --target");
      }
      const LanguageSet* meta = metadata_or_throw(corpus, args.metadata_path, &meta_storage);
      PoolPolicy policy = parse_policy(std::string(1, m[3]));
      LanguagePool pool = build_pool(*meta, policy, args.target, args.pool_k);
      options.ref_languages = pool.members;
      pool_params.push_back({"policy", policy_name(policy)});
      if (pool.k > 0) pool_params.push_back({"k", std::to_string(pool.k)});
      pool_params.push_back({"target", args.target});
    } else {
      throw Error(Errc::bad_config,
                  "unknown method '" + m +
                      "'; expected one of luke, rand, s, sn, sng2..sng5, entN, entK, "
                      "aggL, aggF, aggP, aggN");
    }

    if (options.ref_languages.empty()) options.ref_languages = args.ref_langs;
    if (options.ref_languages.empty()) {
      throw Error(Errc::bad_config, "--ref-lang required for method " + m);
    }
    options.budget_language = args.budget_lang;
    std::string effective_budget_lang = args.budget_lang;
    if (effective_budget_lang.empty()) {
      auto sorted = options.ref_languages;
      std::sort(sorted.begin(), sorted.end());
      effective_budget_lang = sorted[0];
    }
    options.budget = resolve_budget(effective_budget_lang);

    ranking = select_greedy(corpus, options);
    ranking.method = spec.name;
    if (spec.kind == ScorerKind::sng && spec.order > 1) {
      ranking.params.push_back({"order", std::to_string(spec.order)});
    } else if (spec.kind == ScorerKind::ent) {
      ranking.params.push_back({"order_c", std::to_string(spec.ent.chosen_order)});
      ranking.params.push_back({"order_lr", std::to_string(spec.ent.side_order)});
      ranking.params.push_back({"warm_start", std::to_string(spec.ent.warm_start)});
    }
    for (auto& kv : pool_params) ranking.params.push_back(std::move(kv));
  }

  write_ranking(ranking, args.out);
  std::cout << "method=" << ranking.method << " lines=" << ranking.entries.size()
            << " words=" << ranking.words_selected() << " budget=" << ranking.budget
            << " budget_language=" << ranking.budget_language
            << (ranking.exhausted ? " warning=corpus_exhausted" : "")
            << " output=" << args.out << "\n";
  return 0;
}

int run_inspect(const std::string& corpus_path, const std::string& lang,
                const std::string& span_name, int masked) {
  ParallelCorpus corpus = ParallelCorpus::load(corpus_path);
  if (!span_name.empty()) {
    LineSpan span = corpus.span(span_name);
    std::vector<std::string> langs =
        lang.empty() ? corpus.languages() : std::vector<std::string>{lang};
    for (const auto& l : langs) {
      std::cout << "span=" << span_name << " lang=" << l
                << " words=" << word_budget(corpus, l, span) << "\n";
    }
    return 0;
  }
  std::cout << "lines=" << corpus.num_lines() << "\n";
  std::cout << "corpus_checksum=" << corpus.checksum() << "\n";
  std::cout << "line_id_checksum=" << corpus.line_id_checksum() << "\n";
  std::string spans;
  for (const auto& [name, span] : corpus.spans()) {
    if (!spans.empty()) spans += ",";
    spans += name + "[" + std::to_string(span.begin) + "," + std::to_string(span.end) + ")";
  }
  std::cout << "spans=" << (spans.empty() ? "-" : spans) << "\n";
  for (const auto& l : corpus.languages()) {
    if (!lang.empty() && l != lang) continue;
    uint64_t tokens = 0;
    for (const auto& toks : corpus.tokens(l)) tokens += toks.size();
    FrequencyTable table(corpus, l, 1);
    std::cout << "lang=" << l << " tokens=" << tokens << " vocab=" << table.vocab_size()
              << "\n";
  }
  if (masked > 0) {
    if (!corpus.ne_lexicon()) {
      throw Error(Errc::bad_config, "--masked needs a nelex entry in the manifest");
    }
    std::string l = lang.empty() ? corpus.languages()[0] : lang;
    for (uint32_t i = 0; i < corpus.num_lines() && i < static_cast<uint32_t>(masked); ++i) {
      auto ml = mask_named_entities(corpus.tokenized_line(l, i), *corpus.ne_lexicon(), l);
      std::cout << "masked " << corpus.line_ids()[i] << ":";
      for (const auto& tok : ml.line.tokens) std::cout << " " << tok;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_aggregate(const std::string& metadata_path, const std::string& policy_arg,
                  const std::string& target, int k, const std::string& out) {
  LanguageSet metadata = LanguageSet::load(metadata_path);
  PoolPolicy policy = parse_policy(policy_arg);
  LanguagePool pool = build_pool(metadata, policy, target, k);
  std::ostringstream body;
  body << "policy=" << policy_name(policy) << "\n";
  body << "target=" << pool.target << "\n";
  if (pool.k > 0) body << "k=" << pool.k << "\n";
  body << "members=" << pool.members.size() << "\n";
  for (const auto& code : pool.members) body << code << "\n";
  if (out.empty()) {
    std::cout << body.str();
  } else {
    write_file_atomic(out, body.str());
    std::cout << "policy=" << policy_name(policy) << " members=" << pool.members.size()
              << " output=" << out << "\n";
  }
  return 0;
}

struct EvaluateArgs {
  std::vector<std::string> hyp_paths;
  std::string ref_path;
  std::string metric = "chrf";
  int max_n = 6;
  double beta = 2.0;
  bool smooth_bleu = true;
  std::string combine;
  std::string combined_out;
  bool intersect = false;
  std::string corpus_path;
  std::vector<std::string> ranking_paths;
  std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
  if (args.intersect) {
    if (args.corpus_path.empty()) throw Error(Errc::bad_config, "--intersect needs --corpus");
    if (args.out.empty()) throw Error(Errc::bad_config, "--intersect needs --out");
    ParallelCorpus corpus = ParallelCorpus::load(args.corpus_path);
    std::vector<Ranking> rankings;
    rankings.reserve(args.ranking_paths.size());
    for (const auto& path : args.ranking_paths) rankings.push_back(load_ranking(path));
    TestSetSpec spec = intersection_test_set(corpus, rankings);
    write_file_atomic(args.out, format_test_set(spec));
    std::cout << "included=" << spec.included.size()
              << " excluded=" << (corpus.num_lines() - spec.included.size())
              << " output=" << args.out << "\n";
    return 0;
  }

  if (args.hyp_paths.empty() || args.ref_path.empty()) {
    throw Error(Errc::bad_config, "need --hyp and --ref (or --intersect mode)");
  }
  std::vector<std::string> refs = read_all_lines(args.ref_path);
  std::vector<std::vector<std::string>> hyps;
  for (const auto& path : args.hyp_paths) {
    hyps.push_back(read_all_lines(path));
    if (hyps.back().size() != refs.size()) {
      throw Error(Errc::length_mismatch,
                  path + " has " + std::to_string(hyps.back().size()) +
                      " lines, reference has " + std::to_string(refs.size()));
    }
  }

  std::vector<std::string> scored;
  if (!args.combine.empty()) {
    if (args.combine != "centeredness") {
      throw Error(Errc::bad_config, "unknown --combine mode '" + args.combine + "'");
    }
    ChrfParams sim{args.max_n, args.beta};
    std::string stream;
    scored.reserve(refs.size());
    for (size_t i = 0; i < refs.size(); ++i) {
      std::vector<std::string> candidates;
      candidates.reserve(hyps.size());
      for (const auto& h : hyps) candidates.push_back(h[i]);
      auto [index, score] = centeredness_combine(candidates, sim);
      (void)score;
      scored.push_back(candidates[index]);
      stream += candidates[index];
      stream += '\n';
    }
    if (!args.combined_out.empty()) {
      write_file_atomic(args.combined_out, stream);
    } else {
      std::cout << stream;
    }
  } else {
    if (args.hyp_paths.size() != 1) {
      throw Error(Errc::bad_config, "multiple --hyp files need --combine centeredness");
    }
    scored = hyps[0];
  }

  if (args.metric != "chrf" && args.metric != "bleu" && args.metric != "all") {
    throw Error(Errc::bad_config, "unknown metric '" + args.metric + "'");
  }
  if (args.metric == "chrf" || args.metric == "all") {
    double value = chrf_corpus(scored, refs, ChrfParams{args.max_n, args.beta});
    std::cout << "chrf\t" << format_double(value) << "\tmax_n=" << args.max_n
              << ",beta=" << format_double(args.beta) << "\n";
  }
  if (args.metric == "bleu" || args.metric == "all") {
    double value = bleu(scored, refs, BleuParams{4, args.smooth_bleu});
    std::cout << "bleu\t" << format_double(value) << "\tmax_n=4,smoothing="
              << (args.smooth_bleu ? "add1" : "none") << "\n";
  }
  return 0;
}

int run_schedule_list() {
  for (const auto& s : enumerate_schedules()) {
    std::cout << s.label << ":";
    for (size_t i = 0; i < s.stages.size(); ++i) {
      std::cout << (i ? "," : " ") << stage_name(s.stages[i]);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_schedule_emit(const std::string& label_arg, const std::string& target,
                      const std::string& metadata_path, std::vector<std::string> sources,
                      const std::string& ranking_path, int bpe_target, int bpe_combined,
                      const std::string& out) {
  if (label_arg.size() != 1) {
    throw Error(Errc::invalid_schedule, "label must be a single letter A..X");
  }
  const Schedule& schedule = schedule_by_label(label_arg[0]);
  ScheduleConfig config;
  config.target = target;
  if (sources.empty()) {
    if (metadata_path.empty()) {
      throw Error(Errc::bad_config, "need --sources or --metadata to resolve sources");
    }
    LanguageSet metadata = LanguageSet::load(metadata_path);
    config.sources = metadata.at(target).neighbors;
    if (config.sources.empty()) {
      throw Error(Errc::insufficient_metadata, target + " declares no neighbors");
    }
  } else {
    config.sources = std::move(sources);
  }
  if (!ranking_path.empty()) config.seed_ranking = ranking_path;
  config.bpe_target = bpe_target;
  config.bpe_combined = bpe_combined;
  write_file_atomic(out, emit_manifest(schedule, config));
  std::cout << "schedule=" << schedule.label << " stages=" << schedule.stages.size()
            << " output=" << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seed corpus selection and evaluation for multilingual translation"};
  app.require_subcommand(1);

  auto* inspect = app.add_subcommand("inspect", "corpus statistics and span word counts");
  std::string in_corpus, in_lang, in_span;
  int in_masked = 0;
  inspect->add_option("--corpus", in_corpus, "corpus manifest")->required();
  inspect->add_option("--lang", in_lang, "restrict to one language");
  inspect->add_option("--span", in_span, "named span: print word counts");
  inspect->add_option("--masked", in_masked, "print the first N lines with entities masked");

  auto* select = app.add_subcommand("select", "build a ranked seed corpus");
  SelectArgs sel;
  select->add_option("--corpus", sel.corpus_path, "corpus manifest")->required();
  select->add_option("--method", sel.method,
                     "luke|rand|s|sn|sng2..sng5|entN|entK|aggL|aggF|aggP|aggN")
      ->required();
  select->add_option("--order", sel.order, "n-gram order J for sng/agg methods");
  select->add_option("--ref-lang", sel.ref_langs, "reference language (repeatable)");
  select->add_option("--metadata", sel.metadata_path, "language metadata csv (agg methods)");
  select->add_option("--target", sel.target, "target language code (agg methods)");
  select->add_option("--pool-k", sel.pool_k, "pool size for aggF/aggP")->capture_default_str();
  select->add_option("--budget-words", sel.budget_words, "budget in words");
  select->add_option("--budget-span", sel.budget_span,
                     "named span whose word count is the budget");
  select->add_option("--budget-lang", sel.budget_lang, "language the budget is counted in");
  select->add_option("--seed", sel.seed, "random baseline seed")->capture_default_str();
  select->add_option("--start-line", sel.start_line, "excerpt start line (luke method)");
  select->add_option("--engine", sel.engine, "memo|naive")->capture_default_str();
  select->add_option("--jobs", sel.jobs, "worker threads (0 = all cores); output does not depend on it")
      ->capture_default_str();
  select->add_option("--out", sel.out, "ranking output path")->required();

  auto* aggregate = app.add_subcommand("aggregate", "build a language pool from metadata");
  std::string ag_meta, ag_policy, ag_target, ag_out;
  int ag_k = 10;
  aggregate->add_option("--metadata", ag_meta, "language metadata csv")->required();
  aggregate->add_option("--policy", ag_policy, "language|family|person|neighbor")->required();
  aggregate->add_option("--target", ag_target, "target language code")->required();
  aggregate->add_option("-k,--pool-k", ag_k, "pool size for family/person")
      ->capture_default_str();
  aggregate->add_option("--out", ag_out, "write the pool listing to a file");

  auto* evaluate = app.add_subcommand("evaluate", "chrF/BLEU metrics and test set tools");
  EvaluateArgs ev;
  evaluate->add_option("--hyp", ev.hyp_paths, "hypothesis file (repeatable)");
  evaluate->add_option("--ref", ev.ref_path, "reference file");
  evaluate->add_option("--metric", ev.metric, "chrf|bleu|all")->capture_default_str();
  evaluate->add_option("--max-n", ev.max_n, "chrF character n-gram order")
      ->capture_default_str();
  evaluate->add_option("--beta", ev.beta, "chrF beta")->capture_default_str();
  evaluate->add_flag("!--no-bleu-smoothing", ev.smooth_bleu, "disable add-one BLEU smoothing");
  evaluate->add_option("--combine", ev.combine, "centeredness: merge multiple --hyp streams");
  evaluate->add_option("--combined-out", ev.combined_out, "write the combined stream here");
  evaluate->add_flag("--intersect", ev.intersect, "emit the shared test set instead");
  evaluate->add_option("--corpus", ev.corpus_path, "corpus manifest (--intersect)");
  evaluate->add_option("--ranking", ev.ranking_paths, "ranking file (repeatable, --intersect)");
  evaluate->add_option("--out", ev.out, "output path (--intersect)");

  auto* schedule = app.add_subcommand("schedule", "training schedule planner");
  schedule->require_subcommand(1);
  auto* sched_list = schedule->add_subcommand("list", "list all 24 schedules");
  auto* sched_emit = schedule->add_subcommand("emit", "write a schedule manifest");
  std::string sc_label, sc_target, sc_meta, sc_ranking, sc_out;
  std::vector<std::string> sc_sources;
  int sc_bpe_target = 3000, sc_bpe_combined = 9000;
  sched_emit->add_option("label", sc_label, "schedule label A..X")->required();
  sched_emit->add_option("--target", sc_target, "target language code")->required();
  sched_emit->add_option("--metadata", sc_meta, "metadata csv; sources = target's neighbors");
  sched_emit->add_option("--sources", sc_sources, "explicit source languages")->delimiter(',');
  sched_emit->add_option("--ranking", sc_ranking, "seed-corpus ranking path to record");
  sched_emit->add_option("--bpe-target", sc_bpe_target, "subword vocabulary for the target")
      ->capture_default_str();
  sched_emit->add_option("--bpe-combined", sc_bpe_combined, "subword vocabulary, combined")
      ->capture_default_str();
  sched_emit->add_option("--out", sc_out, "manifest output path")->required();

  try {
    app.parse(argc, argv);
    if (*inspect) return run_inspect(in_corpus, in_lang, in_span, in_masked);
    if (*select) {
      if (sel.jobs <= 0) {
        sel.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      }
      if (sel.engine != "memo" && sel.engine != "naive") {
        throw Error(Errc::bad_config, "--engine must be memo or naive");
      }
      return run_select(sel);
    }
    if (*aggregate) return run_aggregate(ag_meta, ag_policy, ag_target, ag_k, ag_out);
    if (*evaluate) return run_evaluate(ev);
    if (*schedule) {
      if (*sched_list) return run_schedule_list();
      return run_schedule_emit(sc_label, sc_target, sc_meta, sc_sources, sc_ranking,
                               sc_bpe_target, sc_bpe_combined, sc_out);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
