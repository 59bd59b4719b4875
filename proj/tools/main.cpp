// Copyright 2026 The cwtm Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cwtm/cooc_network.hpp"
#include "cwtm/corpus.hpp"
#include "cwtm/experiment.hpp"
#include "cwtm/gibbs.hpp"
#include "cwtm/inference.hpp"
#include "cwtm/pseudo_docs.hpp"
#include "cwtm/synthetic.hpp"

namespace {

using namespace cwtm;

struct RunOptions {
  std::string model = "cwutm";
  std::string preset;
  ExperimentConfig cfg;
};

void add_common_model_flags(CLI::App* cmd, ExperimentConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha,
                  "doc-topic Dirichlet; default per model (lda 0.05, wntm/cwutm 0.1)");
  cmd->add_option("--beta", cfg.beta,
                  "topic-word Dirichlet; default per model (lda 0.01, wntm/cwutm 0.1)");
  cmd->add_option("--window-size", cfg.window_size, "sliding window size")
      ->capture_default_str();
  cmd->add_option("--lambda", cfg.lambda, "pseudo-document multiplicity scale")
      ->capture_default_str();
  cmd->add_option("--iterations", cfg.iterations, "Gibbs sweeps per run")
      ->capture_default_str();
  cmd->add_option("--min-count", cfg.min_count, "drop words seen fewer times")
      ->capture_default_str();
  cmd->add_option("--stopwords", cfg.stopword_path, "stopword file, one word per line");
}

void apply_preset(const std::string& preset, ExperimentConfig& cfg, bool topics_set,
                  bool threshold_set) {
  if (preset.empty()) return;
  const DatasetPreset* p = find_dataset_preset(preset);
  if (!p) {
    throw CLI::ValidationError("--preset", "unknown preset: " + preset);
  }
  if (!topics_set) cfg.topics = p->topics;
  if (!threshold_set) cfg.scarce_threshold = p->scarce_threshold;
}

int cmd_run(const RunOptions& opt) {
  ExperimentConfig cfg = opt.cfg;
  cfg.models = parse_models(opt.model);
  const EvalReport report = run_experiment(cfg);
  emit_report(report, cfg.output_dir);
  std::cout << report_text(report);
  std::cout << "report written to " << cfg.output_dir << "/report.{json,csv,txt}\n";
  return 0;
}

int cmd_synth(const SyntheticSpec& spec, const std::string& prefix) {
  const RawCorpus raw = make_synthetic_unbalanced(spec);
  write_corpus(raw, prefix + ".txt", prefix + ".labels");
  std::map<std::string, int> per_label;
  for (const auto& l : raw.labels) ++per_label[l];
  std::cout << raw.size() << " documents, " << per_label.size() << " topics -> "
            << prefix << ".txt, " << prefix << ".labels\n";
  for (const auto& [label, n] : per_label) {
    std::cout << "  " << label << ": " << n << " docs\n";
  }
  return 0;
}

int cmd_split(const std::string& text, const std::string& labels,
              std::int64_t threshold, const std::string& preset,
              bool threshold_set, const std::string& out_dir) {
  std::int64_t effective = threshold;
  if (!preset.empty() && !threshold_set) {
    const DatasetPreset* p = find_dataset_preset(preset);
    if (!p) throw CLI::ValidationError("--preset", "unknown preset: " + preset);
    effective = p->scarce_threshold;
  }

  // Partition the original lines so the output keeps the input text intact.
  const RawCorpus raw = load_corpus(text, labels);
  if (!raw.labeled()) throw std::runtime_error("split requires a label file");
  std::map<std::string, std::int64_t> label_count;
  for (const auto& l : raw.labels) ++label_count[l];

  RawCorpus scarce, abundant;
  for (std::size_t d = 0; d < raw.size(); ++d) {
    auto& side = label_count.at(raw.labels[d]) <= effective ? scarce : abundant;
    side.docs.push_back(raw.docs[d]);
    side.labels.push_back(raw.labels[d]);
  }

  std::filesystem::create_directories(out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };
  write_corpus(scarce, path("scarce.txt"), path("scarce.labels"));
  write_corpus(abundant, path("abundant.txt"), path("abundant.labels"));

  auto distinct = [](const RawCorpus& c) {
    std::map<std::string, int> m;
    for (const auto& l : c.labels) ++m[l];
    return m.size();
  };
  std::cout << "threshold " << effective << ": scarce " << distinct(scarce)
            << " topics / " << scarce.size() << " docs; abundant "
            << distinct(abundant) << " topics / " << abundant.size() << " docs\n";
  return 0;
}

int cmd_dump_network(const std::string& text, int window, std::int64_t min_count,
                     const std::string& stopword_path, const std::string& out) {
  std::unordered_set<std::string> stopwords;
  if (!stopword_path.empty()) stopwords = load_stopwords(stopword_path);
  const Corpus corpus = build_vocabulary(load_corpus(text), min_count, stopwords);
  const RawCoocNetwork raw = build_raw_network(corpus, window);
  const WeightedCoocNetwork weighted = weight_and_prune(raw);
  write_edge_list(raw, weighted, corpus.vocabulary, out);
  std::cout << raw.pair_count.size() << " raw edges, " << weighted.edge_count()
            << " surviving after pruning -> " << out << '\n';
  return 0;
}

struct DumpTopicsOptions {
  std::string model = "cwutm";
  std::string text, labels;
  std::string preset;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  ExperimentConfig cfg;  // reuses hyperparameter fields
};

int cmd_dump_topics(const DumpTopicsOptions& opt, bool topics_set) {
  ExperimentConfig cfg = opt.cfg;
  apply_preset(opt.preset, cfg, topics_set, true);
  if (cfg.topics < 2) {
    throw CLI::ValidationError("--topics", "set --topics (or --preset)");
  }
  const ModelKind kind = model_from_string(opt.model);

  std::unordered_set<std::string> stopwords;
  if (!cfg.stopword_path.empty()) stopwords = load_stopwords(cfg.stopword_path);
  const RawCorpus raw = load_corpus(opt.text, opt.labels);
  const Corpus corpus = build_vocabulary(raw, cfg.min_count, stopwords);

  TokenDocs docs;
  if (kind == ModelKind::Lda) {
    for (const auto& d : corpus.documents) docs.push_back(d.tokens);
  } else {
    const RawCoocNetwork net = build_raw_network(corpus, cfg.window_size);
    docs = kind == ModelKind::Wntm
               ? from_raw_network(net).expand()
               : from_weighted_network(weight_and_prune(net), cfg.lambda).expand();
  }

  GibbsConfig gibbs{cfg.topics, cfg.alpha_for(kind), cfg.beta_for(kind),
                    cfg.iterations, opt.seed};
  const TopicModel model = run_gibbs(docs, corpus.vocabulary.size(), gibbs);

  std::filesystem::create_directories(opt.out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(opt.out_dir) / name).string();
  };
  write_top_words(model, corpus.vocabulary, cfg.top_words, path("topics_top20.txt"));
  write_phi_csv(model, path("phi.csv"));
  write_theta_csv(model, path("theta.csv"));
  const std::vector<int> clusters = kind == ModelKind::Lda
                                        ? cluster_by_doc_model(corpus, model)
                                        : cluster_by_word_model(corpus, model);
  write_assignments(corpus, clusters, path("assignments.csv"));
  std::cout << "wrote topics_top20.txt, phi.csv, theta.csv, assignments.csv to "
            << opt.out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-occurrence word-network topic models for short text"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "train models and evaluate purity/NMI");
  run_cmd->set_config("--config", "", "flat key=value config file; flags override it");
  run_cmd->add_option("--model", run.model, "lda|wntm|cwutm|all")->capture_default_str();
  run_cmd->add_option("--text", run.cfg.text_path, "corpus file, one document per line")
      ->required();
  run_cmd->add_option("--labels", run.cfg.label_path, "label file, one label per line")
      ->required();
  auto* run_topics = run_cmd->add_option("--topics,-k", run.cfg.topics, "topic count K");
  auto* run_threshold = run_cmd->add_option("--scarce-threshold", run.cfg.scarce_threshold,
                                            "labels with <= this many docs are scarce");
  run_cmd->add_option("--preset", run.preset,
                      "dataset preset (tweet|googlenews|searchsnippets) filling "
                      "--topics and --scarce-threshold");
  run_cmd->add_option("--runs", run.cfg.runs, "seeded runs to average")->capture_default_str();
  run_cmd->add_option("--seed", run.cfg.base_seed, "base seed; run r uses seed+r")
      ->capture_default_str();
  run_cmd->add_option("--threads", run.cfg.threads, "parallel runs (0 = all cores)")
      ->capture_default_str();
  run_cmd->add_option("--output", run.cfg.output_dir, "report directory")
      ->capture_default_str();
  run_cmd->add_flag("--retrain-per-subset", run.cfg.retrain_per_subset,
                    "retrain on each subset instead of train-once/evaluate-per-subset");
  run_cmd->add_option("--top-words", run.cfg.top_words, "words per topic in dumps")
      ->capture_default_str();
  run_cmd->add_flag("--dump-topics", run.cfg.dump_topics,
                    "also write topics_top20.txt, phi.csv, theta.csv");
  run_cmd->add_flag("--dump-assignments", run.cfg.dump_assignments,
                    "also write assignments.csv");
  run_cmd->add_flag("--dump-network", run.cfg.dump_network, "also write network.tsv");
  add_common_model_flags(run_cmd, run.cfg);

  // --- synth ---------------------------------------------------------------
  SyntheticSpec synth;
  std::string synth_prefix = "synthetic";
  auto* synth_cmd = app.add_subcommand("synth", "generate the unbalanced synthetic corpus");
  synth_cmd->add_option("--abundant-topics", synth.abundant_topics)->capture_default_str();
  synth_cmd->add_option("--scarce-topics", synth.scarce_topics)->capture_default_str();
  synth_cmd->add_option("--docs-per-abundant", synth.docs_per_abundant)->capture_default_str();
  synth_cmd->add_option("--docs-per-scarce", synth.docs_per_scarce)->capture_default_str();
  synth_cmd->add_option("--vocab-per-topic", synth.vocab_per_topic)->capture_default_str();
  synth_cmd->add_option("--doc-len", synth.doc_len)->capture_default_str();
  synth_cmd->add_option("--overlap-fraction", synth.overlap_fraction,
                        "chance a token comes from the shared pool")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--output-prefix", synth_prefix, "writes PREFIX.txt and PREFIX.labels")
      ->capture_default_str();

  // --- split ---------------------------------------------------------------
  std::string split_text, split_labels, split_out = ".", split_preset;
  std::int64_t split_threshold = 0;
  auto* split_cmd = app.add_subcommand("split", "write scarce/abundant subsets");
  split_cmd->add_option("--text", split_text)->required();
  split_cmd->add_option("--labels", split_labels)->required();
  auto* split_thr_opt = split_cmd->add_option("--scarce-threshold", split_threshold,
                                              "labels with <= this many docs are scarce");
  split_cmd->add_option("--preset", split_preset, "dataset preset for the threshold");
  split_cmd->add_option("--output-dir", split_out)->capture_default_str();

  // --- dump-network ----------------------------------------------------------
  std::string net_text, net_stop, net_out = "network.tsv";
  int net_window = 10;
  std::int64_t net_min_count = 1;
  auto* net_cmd = app.add_subcommand("dump-network", "write the co-occurrence edge list");
  net_cmd->add_option("--text", net_text)->required();
  net_cmd->add_option("--window-size", net_window)->capture_default_str();
  net_cmd->add_option("--min-count", net_min_count)->capture_default_str();
  net_cmd->add_option("--stopwords", net_stop);
  net_cmd->add_option("--output", net_out)->capture_default_str();

  // --- dump-topics ------------------------------------------------------------
  DumpTopicsOptions dump;
  auto* dump_cmd = app.add_subcommand("dump-topics",
                                      "train one model and dump topics and matrices");
  dump_cmd->add_option("--model", dump.model, "lda|wntm|cwutm")->capture_default_str();
  dump_cmd->add_option("--text", dump.text)->required();
  dump_cmd->add_option("--labels", dump.labels, "optional label file for assignments.csv");
  auto* dump_topics_opt = dump_cmd->add_option("--topics,-k", dump.cfg.topics, "topic count K");
  dump_cmd->add_option("--preset", dump.preset, "dataset preset filling --topics");
  dump_cmd->add_option("--seed", dump.seed)->capture_default_str();
  dump_cmd->add_option("--top-words", dump.cfg.top_words)->capture_default_str();
  dump_cmd->add_option("--output-dir", dump.out_dir)->capture_default_str();
  add_common_model_flags(dump_cmd, dump.cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      apply_preset(run.preset, run.cfg, run_topics->count() > 0,
                   run_threshold->count() > 0);
      if (run.cfg.topics < 2) {
        throw CLI::ValidationError("--topics", "set --topics (or --preset)");
      }
      return cmd_run(run);
    }
    if (synth_cmd->parsed()) return cmd_synth(synth, synth_prefix);
    if (split_cmd->parsed()) {
      return cmd_split(split_text, split_labels, split_threshold, split_preset,
                       split_thr_opt->count() > 0, split_out);
    }
    if (net_cmd->parsed()) {
      return cmd_dump_network(net_text, net_window, net_min_count, net_stop, net_out);
    }
    if (dump_cmd->parsed()) return cmd_dump_topics(dump, dump_topics_opt->count() > 0);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
