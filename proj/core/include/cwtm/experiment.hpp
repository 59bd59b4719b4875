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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cwtm/corpus.hpp"
#include "cwtm/gibbs.hpp"

namespace cwtm {

enum class ModelKind { Lda, Wntm, Cwutm };

std::string to_string(ModelKind kind);
ModelKind model_from_string(const std::string& name);
// "lda" | "wntm" | "cwutm" | "all" (all three, in table order)
std::vector<ModelKind> parse_models(const std::string& spec);

/// Named dataset presets: topic count and scarce/abundant split threshold.
struct DatasetPreset {
  const char* name;
  int topics;
  std::int64_t scarce_threshold;
};
// "tweet", "googlenews", "searchsnippets"; nullptr when unknown.
const DatasetPreset* find_dataset_preset(const std::string& name);

struct ExperimentConfig {
  std::vector<ModelKind> models{ModelKind::Cwutm};

  std::string text_path;
  std::string label_path;
  std::string stopword_path;
  std::string output_dir = ".";

  int topics = 0;      // K; must be set (>= 2)
  double alpha = -1.0; // < 0: per-model default (lda 0.05, wntm/cwutm 0.1)
  double beta = -1.0;  // < 0: per-model default (lda 0.01, wntm/cwutm 0.1)
  int window_size = 10;
  double lambda = 10.0; // pseudo-document multiplicity scale
  int iterations = 1000;
  int runs = 10;
  std::uint64_t base_seed = 1; // run r uses seed base_seed + r
  std::int64_t scarce_threshold = 0;
  std::int64_t min_count = 1;
  bool retrain_per_subset = false;
  int threads = 0; // 0 = hardware concurrency

  int top_words = 20;
  bool dump_topics = false;
  bool dump_assignments = false;
  bool dump_network = false;

  void validate() const;
  double alpha_for(ModelKind kind) const;
  double beta_for(ModelKind kind) const;
};

struct MetricPair {
  double purity = 0.0;
  double nmi = 0.0;
};

struct MetricAggregate {
  MetricPair mean;
  MetricPair stddev; // sample standard deviation (n - 1); 0 for a single run
};

struct RunScores {
  std::uint64_t seed = 0;
  std::vector<MetricPair> by_subset; // aligned with EvalReport::subsets
};

struct ModelReport {
  ModelKind model{};
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<RunScores> runs;
  std::vector<MetricAggregate> aggregate; // aligned with EvalReport::subsets
  std::size_t folded_docs = 0; // LDA fold-in fallbacks, flagged when nonzero
};

struct SubsetInfo {
  std::string name; // "full", "scarce", "abundant"
  std::size_t documents = 0;
  std::size_t labels = 0;
};

struct EvalReport {
  ExperimentConfig config;
  std::vector<SubsetInfo> subsets;
  std::vector<ModelReport> models;

  // Timing lives apart from the payload: it is the one part of a report
  // excluded from determinism comparisons.
  std::string started_at; // ISO-8601 UTC
  std::vector<std::pair<std::string, double>> phase_seconds;
};

// Loads the dataset named by the config, then defers to the overload below.
EvalReport run_experiment(const ExperimentConfig& cfg);

// Trains each configured model on the full corpus with runs seeded
// base_seed..base_seed+R-1 (independent chains, run in parallel) and
// evaluates Purity/NMI on the full corpus and its scarce/abundant halves.
// With retrain_per_subset the subset scores come from models retrained on
// the subset instead. Deterministic for a fixed config and corpus.
EvalReport run_experiment(const ExperimentConfig& cfg, const Corpus& corpus);

std::string report_json(const EvalReport& report);
std::string report_csv(const EvalReport& report);  // aggregates only
std::string report_text(const EvalReport& report); // mean (± std) table, percent

// Writes report.json, report.csv, report.txt under dir.
void emit_report(const EvalReport& report, const std::string& dir);

// Parses a report.json payload back into the numeric fields (runs and
// aggregates); used for round-trip checks and external tooling.
EvalReport parse_report_json(const std::string& json_text);

// Model dumps. CSV matrices carry a "K,V,D" header row and are row-major.
void write_top_words(const TopicModel& model, const Vocabulary& vocab, int top_n,
                     const std::string& path);
void write_phi_csv(const TopicModel& model, const std::string& path);
void write_theta_csv(const TopicModel& model, const std::string& path);

}  // namespace cwtm
