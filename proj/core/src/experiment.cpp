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

#include "cwtm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "cwtm/cooc_network.hpp"
#include "cwtm/evaluation.hpp"
#include "cwtm/inference.hpp"
#include "cwtm/pseudo_docs.hpp"

namespace cwtm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v, const char* fmt = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MetricAggregate aggregate_metric(const std::vector<MetricPair>& values) {
  MetricAggregate agg;
  const double n = static_cast<double>(values.size());
  for (const auto& v : values) {
    agg.mean.purity += v.purity;
    agg.mean.nmi += v.nmi;
  }
  agg.mean.purity /= n;
  agg.mean.nmi /= n;
  if (values.size() > 1) {
    double sp = 0.0, sn = 0.0;
    for (const auto& v : values) {
      sp += (v.purity - agg.mean.purity) * (v.purity - agg.mean.purity);
      sn += (v.nmi - agg.mean.nmi) * (v.nmi - agg.mean.nmi);
    }
    agg.stddev.purity = std::sqrt(sp / (n - 1.0));
    agg.stddev.nmi = std::sqrt(sn / (n - 1.0));
  }
  return agg;
}

TokenDocs real_token_docs(const Corpus& corpus) {
  TokenDocs docs;
  docs.reserve(corpus.documents.size());
  for (const auto& d : corpus.documents) docs.push_back(d.tokens);
  return docs;
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Lda: return "lda";
    case ModelKind::Wntm: return "wntm";
    case ModelKind::Cwutm: return "cwutm";
  }
  return "?";
}

ModelKind model_from_string(const std::string& name) {
  if (name == "lda") return ModelKind::Lda;
  if (name == "wntm") return ModelKind::Wntm;
  if (name == "cwutm") return ModelKind::Cwutm;
  throw std::invalid_argument("unknown model: " + name + " (expected lda|wntm|cwutm|all)");
}

std::vector<ModelKind> parse_models(const std::string& spec) {
  if (spec == "all") return {ModelKind::Lda, ModelKind::Wntm, ModelKind::Cwutm};
  return {model_from_string(spec)};
}

const DatasetPreset* find_dataset_preset(const std::string& name) {
  static const DatasetPreset presets[] = {
      {"tweet", 89, 15},
      {"googlenews", 152, 80},
      {"searchsnippets", 8, 1200},
  };
  for (const auto& p : presets) {
    if (name == p.name) return &p;
  }
  return nullptr;
}

void ExperimentConfig::validate() const {
  if (models.empty()) throw std::invalid_argument("no models selected");
  if (topics < 2) throw std::invalid_argument("topics must be >= 2");
  if (alpha >= 0.0 && !(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (beta >= 0.0 && !(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (window_size < 2) throw std::invalid_argument("window_size must be >= 2");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (scarce_threshold < 0) throw std::invalid_argument("scarce_threshold must be >= 0");
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (top_words < 1) throw std::invalid_argument("top_words must be >= 1");
}

double ExperimentConfig::alpha_for(ModelKind kind) const {
  if (alpha > 0.0) return alpha;
  return kind == ModelKind::Lda ? 0.05 : 0.1;
}

double ExperimentConfig::beta_for(ModelKind kind) const {
  if (beta > 0.0) return beta;
  return kind == ModelKind::Lda ? 0.01 : 0.1;
}

namespace {

// One Gibbs training per plan per run; `eval` lists (subset index,
// positions in cluster_corpus->documents) scored from that training.
struct TrainPlan {
  const Corpus* cluster_corpus = nullptr;
  TokenDocs train_docs;
  bool word_model = false;  // pseudo-document route (wntm/cwutm)
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> eval;
};

struct RunOutcome {
  RunScores scores;
  std::size_t folded = 0;
};

TokenDocs training_docs_for(ModelKind kind, const Corpus& corpus,
                            const ExperimentConfig& cfg,
                            std::map<const Corpus*, RawCoocNetwork>& net_cache) {
  if (kind == ModelKind::Lda) return real_token_docs(corpus);
  auto it = net_cache.find(&corpus);
  if (it == net_cache.end()) {
    it = net_cache.emplace(&corpus, build_raw_network(corpus, cfg.window_size)).first;
  }
  if (kind == ModelKind::Wntm) return from_raw_network(it->second).expand();
  return from_weighted_network(weight_and_prune(it->second), cfg.lambda).expand();
}

RunOutcome execute_run(const std::vector<TrainPlan>& plans, const ExperimentConfig& cfg,
                       ModelKind kind, std::size_t vocab, std::size_t num_subsets,
                       std::uint64_t seed) {
  RunOutcome outcome;
  outcome.scores.seed = seed;
  outcome.scores.by_subset.resize(num_subsets);

  for (const auto& plan : plans) {
    GibbsConfig gibbs;
    gibbs.topics = cfg.topics;
    gibbs.alpha = cfg.alpha_for(kind);
    gibbs.beta = cfg.beta_for(kind);
    gibbs.iterations = cfg.iterations;
    gibbs.seed = seed;

    const TopicModel model = run_gibbs(plan.train_docs, vocab, gibbs);
    std::vector<int> clusters;
    if (plan.word_model) {
      clusters = cluster_by_word_model(*plan.cluster_corpus, model);
    } else {
      std::size_t folded = 0;
      clusters = cluster_by_doc_model(*plan.cluster_corpus, model, &folded);
      outcome.folded += folded;
    }

    for (const auto& [subset_index, positions] : plan.eval) {
      std::vector<int> sub_clusters;
      std::vector<std::string> sub_labels;
      sub_clusters.reserve(positions.size());
      sub_labels.reserve(positions.size());
      for (std::size_t p : positions) {
        sub_clusters.push_back(clusters[p]);
        sub_labels.push_back(plan.cluster_corpus->documents[p].label);
      }
      const auto table = ContingencyTable::from(sub_clusters, sub_labels);
      outcome.scores.by_subset[subset_index] = {purity(table), nmi(table)};
    }
  }
  return outcome;
}

}  // namespace

EvalReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.text_path.empty()) throw std::invalid_argument("no corpus text path given");
  if (cfg.label_path.empty()) {
    throw std::invalid_argument("evaluation requires a label file");
  }
  std::unordered_set<std::string> stopwords;
  if (!cfg.stopword_path.empty()) stopwords = load_stopwords(cfg.stopword_path);
  const auto t0 = std::chrono::steady_clock::now();
  const RawCorpus raw = load_corpus(cfg.text_path, cfg.label_path);
  const Corpus corpus = build_vocabulary(raw, cfg.min_count, stopwords);
  const double load_seconds = seconds_since(t0);

  EvalReport report = run_experiment(cfg, corpus);
  report.phase_seconds.insert(report.phase_seconds.begin(), {"load", load_seconds});
  return report;
}

EvalReport run_experiment(const ExperimentConfig& cfg, const Corpus& corpus) {
  cfg.validate();
  if (!corpus.labeled()) {
    throw std::runtime_error("experiment requires a fully labeled corpus");
  }

  EvalReport report;
  report.config = cfg;
  report.started_at = iso_utc_now();

  auto phase_start = std::chrono::steady_clock::now();
  const UnbalancedSplit split = split_unbalanced(corpus, cfg.scarce_threshold);

  std::unordered_map<std::uint32_t, std::size_t> position_of;
  position_of.reserve(corpus.documents.size());
  for (std::size_t p = 0; p < corpus.documents.size(); ++p) {
    position_of.emplace(corpus.documents[p].doc_id, p);
  }

  // Subset order in reports: full, scarce, abundant (empty ones dropped).
  struct SubsetDef {
    std::string name;
    const Corpus* corpus;
    std::vector<std::size_t> full_positions;
  };
  std::vector<SubsetDef> defs;
  {
    std::vector<std::size_t> all(corpus.documents.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
    defs.push_back({"full", &corpus, std::move(all)});
  }
  for (const auto* sub : {&split.scarce, &split.abundant}) {
    if (sub->documents.empty()) continue;
    SubsetDef def;
    def.name = sub == &split.scarce ? "scarce" : "abundant";
    def.corpus = sub;
    def.full_positions.reserve(sub->documents.size());
    for (const auto& d : sub->documents) def.full_positions.push_back(position_of.at(d.doc_id));
    defs.push_back(std::move(def));
  }
  for (const auto& def : defs) {
    report.subsets.push_back({def.name, def.corpus->documents.size(),
                              def.corpus->label_set.size()});
  }
  report.phase_seconds.emplace_back("split", seconds_since(phase_start));

  const std::size_t vocab = corpus.vocabulary.size();
  std::map<const Corpus*, RawCoocNetwork> net_cache;
  bool network_written = false;

  for (ModelKind kind : cfg.models) {
    phase_start = std::chrono::steady_clock::now();

    std::vector<TrainPlan> plans;
    {
      TrainPlan full_plan;
      full_plan.cluster_corpus = &corpus;
      full_plan.train_docs = training_docs_for(kind, corpus, cfg, net_cache);
      full_plan.word_model = kind != ModelKind::Lda;
      full_plan.eval.emplace_back(0, defs[0].full_positions);
      if (!cfg.retrain_per_subset) {
        for (std::size_t s = 1; s < defs.size(); ++s) {
          full_plan.eval.emplace_back(s, defs[s].full_positions);
        }
      }
      plans.push_back(std::move(full_plan));
      if (cfg.retrain_per_subset) {
        for (std::size_t s = 1; s < defs.size(); ++s) {
          TrainPlan plan;
          plan.cluster_corpus = defs[s].corpus;
          plan.train_docs = training_docs_for(kind, *defs[s].corpus, cfg, net_cache);
          plan.word_model = kind != ModelKind::Lda;
          std::vector<std::size_t> positions(defs[s].corpus->documents.size());
          for (std::size_t p = 0; p < positions.size(); ++p) positions[p] = p;
          plan.eval.emplace_back(s, std::move(positions));
          plans.push_back(std::move(plan));
        }
      }
    }

    // Independent chains: one seed per run, executed in parallel.
    const int workers = std::min<int>(
        cfg.runs, cfg.threads > 0
                      ? cfg.threads
                      : std::max(1u, std::thread::hardware_concurrency()));
    std::vector<RunOutcome> outcomes(cfg.runs);
    std::atomic<int> next_run{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
      for (;;) {
        const int r = next_run.fetch_add(1);
        if (r >= cfg.runs) return;
        try {
          outcomes[r] = execute_run(plans, cfg, kind, vocab, defs.size(),
                                    cfg.base_seed + static_cast<std::uint64_t>(r));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    ModelReport mr;
    mr.model = kind;
    mr.alpha = cfg.alpha_for(kind);
    mr.beta = cfg.beta_for(kind);
    mr.folded_docs = outcomes.front().folded;
    for (auto& o : outcomes) mr.runs.push_back(std::move(o.scores));
    for (std::size_t s = 0; s < defs.size(); ++s) {
      std::vector<MetricPair> vals;
      vals.reserve(mr.runs.size());
      for (const auto& run : mr.runs) vals.push_back(run.by_subset[s]);
      mr.aggregate.push_back(aggregate_metric(vals));
    }
    report.models.push_back(std::move(mr));

    if (cfg.dump_topics || cfg.dump_assignments) {
      // Same docs and seed as run 0, so the dumped model is run 0's model.
      std::filesystem::create_directories(cfg.output_dir);
      GibbsConfig gibbs{cfg.topics, cfg.alpha_for(kind), cfg.beta_for(kind),
                        cfg.iterations, cfg.base_seed};
      const TopicModel model = run_gibbs(plans[0].train_docs, vocab, gibbs);
      const std::string prefix =
          cfg.models.size() > 1 ? to_string(kind) + "_" : "";
      const auto out = [&](const std::string& name) {
        return (std::filesystem::path(cfg.output_dir) / (prefix + name)).string();
      };
      if (cfg.dump_topics) {
        write_top_words(model, corpus.vocabulary, cfg.top_words, out("topics_top20.txt"));
        write_phi_csv(model, out("phi.csv"));
        write_theta_csv(model, out("theta.csv"));
      }
      if (cfg.dump_assignments) {
        std::vector<int> clusters =
            kind == ModelKind::Lda ? cluster_by_doc_model(corpus, model)
                                   : cluster_by_word_model(corpus, model);
        write_assignments(corpus, clusters, out("assignments.csv"));
      }
    }
    if (cfg.dump_network && kind != ModelKind::Lda && !network_written) {
      std::filesystem::create_directories(cfg.output_dir);
      const auto& net = net_cache.at(&corpus);
      write_edge_list(net, weight_and_prune(net), corpus.vocabulary,
                      (std::filesystem::path(cfg.output_dir) / "network.tsv").string());
      network_written = true;
    }

    report.phase_seconds.emplace_back(to_string(kind), seconds_since(phase_start));
  }

  return report;
}

namespace {

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j;
  std::vector<std::string> model_names;
  for (auto m : cfg.models) model_names.push_back(to_string(m));
  j["models"] = model_names;
  j["text"] = cfg.text_path;
  j["labels"] = cfg.label_path;
  j["stopwords"] = cfg.stopword_path;
  j["output_dir"] = cfg.output_dir;
  j["topics"] = cfg.topics;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["window_size"] = cfg.window_size;
  j["lambda"] = cfg.lambda;
  j["iterations"] = cfg.iterations;
  j["runs"] = cfg.runs;
  j["base_seed"] = cfg.base_seed;
  j["scarce_threshold"] = cfg.scarce_threshold;
  j["min_count"] = cfg.min_count;
  j["retrain_per_subset"] = cfg.retrain_per_subset;
  j["threads"] = cfg.threads;
  j["top_words"] = cfg.top_words;
  j["dump_topics"] = cfg.dump_topics;
  j["dump_assignments"] = cfg.dump_assignments;
  j["dump_network"] = cfg.dump_network;
  return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig cfg;
  cfg.models.clear();
  for (const auto& name : j.at("models")) cfg.models.push_back(model_from_string(name));
  cfg.text_path = j.at("text");
  cfg.label_path = j.at("labels");
  cfg.stopword_path = j.at("stopwords");
  cfg.output_dir = j.at("output_dir");
  cfg.topics = j.at("topics");
  cfg.alpha = j.at("alpha");
  cfg.beta = j.at("beta");
  cfg.window_size = j.at("window_size");
  cfg.lambda = j.at("lambda");
  cfg.iterations = j.at("iterations");
  cfg.runs = j.at("runs");
  cfg.base_seed = j.at("base_seed");
  cfg.scarce_threshold = j.at("scarce_threshold");
  cfg.min_count = j.at("min_count");
  cfg.retrain_per_subset = j.at("retrain_per_subset");
  cfg.threads = j.at("threads");
  cfg.top_words = j.at("top_words");
  cfg.dump_topics = j.at("dump_topics");
  cfg.dump_assignments = j.at("dump_assignments");
  cfg.dump_network = j.at("dump_network");
  return cfg;
}

}  // namespace

std::string report_json(const EvalReport& report) {
  ordered_json j;
  j["schema"] = "cwtm-report-v1";
  j["config"] = config_json(report.config);

  j["subsets"] = ordered_json::array();
  for (const auto& s : report.subsets) {
    j["subsets"].push_back({{"name", s.name},
                            {"documents", s.documents},
                            {"labels", s.labels}});
  }

  j["models"] = ordered_json::array();
  for (const auto& m : report.models) {
    ordered_json mj;
    mj["model"] = to_string(m.model);
    mj["alpha"] = m.alpha;
    mj["beta"] = m.beta;
    mj["folded_docs"] = m.folded_docs;
    mj["runs"] = ordered_json::array();
    for (const auto& run : m.runs) {
      ordered_json rj;
      rj["seed"] = run.seed;
      ordered_json metrics;
      for (std::size_t s = 0; s < report.subsets.size(); ++s) {
        metrics[report.subsets[s].name] = {{"purity", run.by_subset[s].purity},
                                           {"nmi", run.by_subset[s].nmi}};
      }
      rj["metrics"] = metrics;
      mj["runs"].push_back(rj);
    }
    ordered_json agg;
    for (std::size_t s = 0; s < report.subsets.size(); ++s) {
      agg[report.subsets[s].name] = {
          {"purity",
           {{"mean", m.aggregate[s].mean.purity}, {"stddev", m.aggregate[s].stddev.purity}}},
          {"nmi",
           {{"mean", m.aggregate[s].mean.nmi}, {"stddev", m.aggregate[s].stddev.nmi}}}};
    }
    mj["aggregate"] = agg;
    j["models"].push_back(mj);
  }

  j["timing"] = ordered_json::object();
  j["timing"]["started_at"] = report.started_at;
  ordered_json phases;
  for (const auto& [name, sec] : report.phase_seconds) phases[name] = sec;
  j["timing"]["phase_seconds"] = phases;

  return j.dump(2) + "\n";
}

EvalReport parse_report_json(const std::string& json_text) {
  const ordered_json j = ordered_json::parse(json_text);
  EvalReport report;
  report.config = config_from_json(j.at("config"));
  for (const auto& s : j.at("subsets")) {
    report.subsets.push_back({s.at("name"), s.at("documents"), s.at("labels")});
  }
  for (const auto& mj : j.at("models")) {
    ModelReport m;
    m.model = model_from_string(mj.at("model"));
    m.alpha = mj.at("alpha");
    m.beta = mj.at("beta");
    m.folded_docs = mj.at("folded_docs");
    for (const auto& rj : mj.at("runs")) {
      RunScores run;
      run.seed = rj.at("seed");
      for (const auto& s : report.subsets) {
        const auto& mm = rj.at("metrics").at(s.name);
        run.by_subset.push_back({mm.at("purity"), mm.at("nmi")});
      }
      m.runs.push_back(std::move(run));
    }
    for (const auto& s : report.subsets) {
      const auto& aj = mj.at("aggregate").at(s.name);
      MetricAggregate agg;
      agg.mean.purity = aj.at("purity").at("mean");
      agg.stddev.purity = aj.at("purity").at("stddev");
      agg.mean.nmi = aj.at("nmi").at("mean");
      agg.stddev.nmi = aj.at("nmi").at("stddev");
      m.aggregate.push_back(agg);
    }
    report.models.push_back(std::move(m));
  }
  report.started_at = j.at("timing").at("started_at");
  for (const auto& [name, sec] : j.at("timing").at("phase_seconds").items()) {
    report.phase_seconds.emplace_back(name, sec.get<double>());
  }
  return report;
}

std::string report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "model,subset,metric,mean,stddev,runs\n";
  for (const auto& m : report.models) {
    for (std::size_t s = 0; s < report.subsets.size(); ++s) {
      out << to_string(m.model) << ',' << report.subsets[s].name << ",purity,"
          << format_double(m.aggregate[s].mean.purity) << ','
          << format_double(m.aggregate[s].stddev.purity) << ',' << m.runs.size() << '\n';
      out << to_string(m.model) << ',' << report.subsets[s].name << ",nmi,"
          << format_double(m.aggregate[s].mean.nmi) << ','
          << format_double(m.aggregate[s].stddev.nmi) << ',' << m.runs.size() << '\n';
    }
  }
  return out.str();
}

std::string report_text(const EvalReport& report) {
  // Percent cells in the papers' "mean (± std)" shape, one column per subset.
  std::ostringstream out;
  const int name_w = 8, metric_w = 8, cell_w = 22;
  auto pad = [&](const std::string& s, int w) {
    std::string p = s;
    if (static_cast<int>(p.size()) < w) p.append(w - p.size(), ' ');
    return p;
  };

  out << pad("model", name_w) << pad("metric", metric_w);
  for (const auto& s : report.subsets) {
    out << pad(s.name + " (" + std::to_string(s.documents) + " docs)", cell_w);
  }
  out << '\n';

  for (const auto& m : report.models) {
    const char* metric_names[2] = {"Purity", "NMI"};
    for (int metric = 0; metric < 2; ++metric) {
      out << pad(to_string(m.model), name_w) << pad(metric_names[metric], metric_w);
      for (std::size_t s = 0; s < report.subsets.size(); ++s) {
        const auto& agg = m.aggregate[s];
        const double mean = metric == 0 ? agg.mean.purity : agg.mean.nmi;
        const double stddev = metric == 0 ? agg.stddev.purity : agg.stddev.nmi;
        out << pad(format_double(mean * 100.0, "%.2f") + " (± " +
                       format_double(stddev * 100.0, "%.2f") + ")",
                   cell_w);
      }
      out << '\n';
    }
  }
  return out.str();
}

void emit_report(const EvalReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](const char* name, const std::string& content) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
  };
  write("report.json", report_json(report));
  write("report.csv", report_csv(report));
  write("report.txt", report_text(report));
}

void write_top_words(const TopicModel& model, const Vocabulary& vocab, int top_n,
                     const std::string& path) {
  if (vocab.size() != model.vocab) {
    throw std::invalid_argument("vocabulary does not match the model");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  std::vector<std::size_t> order(model.vocab);
  for (int k = 0; k < model.topics; ++k) {
    const auto row = model.phi_row(k);
    for (std::size_t w = 0; w < order.size(); ++w) order[w] = w;
    const std::size_t n = std::min<std::size_t>(top_n, order.size());
    std::partial_sort(order.begin(), order.begin() + n, order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return row[a] != row[b] ? row[a] > row[b] : a < b;
                      });
    out << "topic " << k << ':';
    for (std::size_t i = 0; i < n; ++i) out << ' ' << vocab.words[order[i]];
    out << '\n';
  }
}

namespace {

void write_matrix_csv(const std::string& path, int topics, std::size_t vocab,
                      std::size_t docs, const std::vector<double>& data,
                      std::size_t rows, std::size_t cols) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << topics << ',' << vocab << ',' << docs << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out << ',';
      out << format_double(data[r * cols + c]);
    }
    out << '\n';
  }
}

}  // namespace

void write_phi_csv(const TopicModel& model, const std::string& path) {
  write_matrix_csv(path, model.topics, model.vocab, model.docs, model.phi,
                   model.topics, model.vocab);
}

void write_theta_csv(const TopicModel& model, const std::string& path) {
  write_matrix_csv(path, model.topics, model.vocab, model.docs, model.theta,
                   model.docs, model.topics);
}

}  // namespace cwtm
