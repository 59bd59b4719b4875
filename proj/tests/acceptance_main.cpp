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

// Acceptance suite: one criterion per check, one PASS/FAIL/SKIP line each.
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwtm/cooc_network.hpp"
#include "cwtm/corpus.hpp"
#include "cwtm/evaluation.hpp"
#include "cwtm/experiment.hpp"
#include "cwtm/gibbs.hpp"
#include "cwtm/inference.hpp"
#include "cwtm/pseudo_docs.hpp"
#include "cwtm/rng.hpp"
#include "cwtm/synthetic.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cwtm;
namespace oracle = cwtm::testing;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void report_skip(int criterion, const std::string& name, const std::string& reason) {
  std::printf("[SKIP] criterion %d: %s — %s\n", criterion, name.c_str(), reason.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------
// 1. Purity/NMI against independent oracles.

void criterion_1() {
  Rng rng(1001);
  bool ok = true;
  std::string detail;
  int tables = 0;
  for (int trial = 0; trial < 150 && ok; ++trial) {
    const int docs = 2 + static_cast<int>(rng.next_below(199));
    const int classes = 1 + static_cast<int>(rng.next_below(6));
    const int clusters = 1 + static_cast<int>(rng.next_below(6));
    std::vector<int> cl(docs), lb(docs);
    for (int i = 0; i < docs; ++i) {
      cl[i] = static_cast<int>(rng.next_below(clusters));
      lb[i] = static_cast<int>(rng.next_below(classes));
    }
    ++tables;
    const double p = purity(cl, lb), p_ref = oracle::purity_oracle(cl, lb);
    const double n = nmi(cl, lb), n_ref = oracle::nmi_entropy_oracle(cl, lb);
    if (std::abs(p - p_ref) > 1e-9) {
      ok = false;
      detail = "purity " + fmt(p) + " vs oracle " + fmt(p_ref);
    }
    if (std::abs(n - n_ref) > 1e-9) {
      ok = false;
      detail = "nmi " + fmt(n) + " vs oracle " + fmt(n_ref);
    }
  }

  // perfect clustering is exactly 1.0 on both metrics
  std::vector<int> labels, clusters;
  for (int i = 0; i < 97; ++i) {
    const int l = static_cast<int>(rng.next_below(5));
    labels.push_back(l);
    clusters.push_back((l + 3) % 5);
  }
  if (purity(clusters, labels) != 1.0) {
    ok = false;
    detail = "perfect purity != 1.0";
  }
  if (nmi(clusters, labels) != 1.0) {
    ok = false;
    detail = "perfect nmi != 1.0";
  }
  report(1, "metric oracles", ok,
         ok ? std::to_string(tables) + " random tables within 1e-9; perfect = 1.0 exactly"
            : detail);
}

// ---------------------------------------------------------------------
// 2. Window scan against the all-window-positions oracle.

Corpus id_corpus(const std::vector<std::vector<WordId>>& docs, std::size_t vocab) {
  Corpus c;
  for (std::size_t i = 0; i < vocab; ++i) {
    c.vocabulary.words.push_back("w" + std::to_string(i));
    c.vocabulary.ids.emplace(c.vocabulary.words.back(), static_cast<WordId>(i));
    c.vocabulary.frequency.push_back(1);
  }
  for (std::size_t d = 0; d < docs.size(); ++d) {
    Document doc;
    doc.doc_id = static_cast<std::uint32_t>(d);
    doc.tokens = docs[d];
    c.documents.push_back(std::move(doc));
  }
  return c;
}

void criterion_2() {
  Rng rng(2002);
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const std::size_t vocab = 2 + rng.next_below(12);
    const int window = 2 + static_cast<int>(rng.next_below(12));
    std::vector<std::vector<WordId>> docs(1 + rng.next_below(50));
    for (auto& doc : docs) {
      doc.resize(rng.next_below(21));
      for (auto& t : doc) t = rng.next_below(static_cast<std::uint32_t>(vocab));
    }
    const auto net = build_raw_network(id_corpus(docs, vocab), window);
    if (net.pair_count != oracle::brute_force_network(docs, window)) {
      ok = false;
      detail = "mismatch on trial " + std::to_string(trial);
    }
  }

  // The worked sliding-window case: 11 distinct tokens, window 10 — the
  // adjacent pair lands in both windows, the distant pair in one.
  PairCounts counts;
  Document fig;
  for (WordId i = 0; i < 11; ++i) fig.tokens.push_back(i);
  scan_windows(fig, 10, counts);
  if (counts.at(pair_key(2, 3)) != 2 || counts.at(pair_key(0, 7)) != 1) {
    ok = false;
    detail = "worked example: (W2,W3)=" + std::to_string(counts.at(pair_key(2, 3))) +
             ", (W0,W7)=" + std::to_string(counts.at(pair_key(0, 7)));
  }
  report(2, "window-scan oracle", ok,
         ok ? "200 random corpora equal the enumeration; counted twice/once reproduced"
            : detail);
}

// ---------------------------------------------------------------------
// 3. Activity-degree fixed points.

void criterion_3() {
  bool ok = true;
  std::string detail;

  // Exact independence: counts (a,b):1 (a,x):7 (b,x):7 (x,y):1, window-2
  // two-word documents. p(a,b) = 1/16 = p(a) p(b).
  {
    std::vector<std::vector<WordId>> docs{{0, 1}};
    for (int i = 0; i < 7; ++i) docs.push_back({0, 2});
    for (int i = 0; i < 7; ++i) docs.push_back({1, 2});
    docs.push_back({2, 3});
    const auto weighted = weight_and_prune(build_raw_network(id_corpus(docs, 4), 2));
    if (weighted.degree_of(0, 1) != 0.0 || weighted.degree.count(pair_key(0, 1)) != 0) {
      ok = false;
      detail = "independent pair not pruned";
    }
  }

  // Anti-correlation: ratio 0.76 < 1.
  {
    std::vector<std::vector<WordId>> docs{{0, 1}};
    for (int i = 0; i < 9; ++i) docs.push_back({0, 2});
    for (int i = 0; i < 9; ++i) docs.push_back({1, 3});
    const auto weighted = weight_and_prune(build_raw_network(id_corpus(docs, 4), 2));
    if (weighted.degree.count(pair_key(0, 1)) != 0) {
      ok = false;
      detail = "anti-correlated pair not pruned";
    }
  }

  // Positive toy: (a,b):2 (c,d):2 gives ratio (1/2)/(1/16) = 8.
  {
    const std::vector<std::vector<WordId>> docs{{0, 1}, {0, 1}, {2, 3}, {2, 3}};
    const auto weighted = weight_and_prune(build_raw_network(id_corpus(docs, 4), 2));
    const double expected = std::log(8.0);
    if (std::abs(weighted.degree_of(0, 1) - expected) > 1e-12) {
      ok = false;
      detail = "degree " + fmt(weighted.degree_of(0, 1)) + " vs ln(8) = " + fmt(expected);
    }
    if (std::abs(weighted.degree_of(2, 3) - expected) > 1e-12) {
      ok = false;
      detail = "degree(c,d) off";
    }
  }
  report(3, "activity-degree fixed points", ok,
         ok ? "independence 0 and pruned; anti-correlated pruned; ln(8) toy within 1e-12"
            : detail);
}

// ---------------------------------------------------------------------
// 4. Desk-scale Gibbs exactness against the enumerated collapsed posterior.

double gibbs_tv_against_enumeration(const TokenDocs& docs, std::size_t vocab,
                                    double alpha, double beta, int burn_in,
                                    int samples) {
  const int K = 2;
  std::size_t total_tokens = 0;
  for (const auto& d : docs) total_tokens += d.size();
  std::size_t num_assignments = 1;
  for (std::size_t t = 0; t < total_tokens; ++t) num_assignments *= K;

  const auto exact = oracle::collapsed_posterior(docs, vocab, K, alpha, beta);
  std::vector<double> exact_folded(num_assignments, 0.0);
  for (std::size_t a = 0; a < num_assignments; ++a) {
    exact_folded[oracle::canonical_assignment(a, total_tokens, K)] += exact[a];
  }

  GibbsConfig cfg{K, alpha, beta, 1, 4040};
  GibbsSampler sampler(docs, vocab, cfg);
  for (int it = 0; it < burn_in; ++it) sampler.sweep();

  std::vector<double> empirical(num_assignments, 0.0);
  const double weight = 1.0 / static_cast<double>(samples);
  for (int it = 0; it < samples; ++it) {
    sampler.sweep();
    std::size_t index = 0;
    std::size_t radix = 1;
    for (const auto& zd : sampler.state().z) {
      for (int z : zd) {
        index += static_cast<std::size_t>(z) * radix;
        radix *= K;
      }
    }
    empirical[oracle::canonical_assignment(index, total_tokens, K)] += weight;
  }

  double tv = 0.0;
  for (std::size_t a = 0; a < num_assignments; ++a) {
    tv += std::abs(empirical[a] - exact_folded[a]);
  }
  return tv / 2.0;
}

void criterion_4() {
  const double tv1 = gibbs_tv_against_enumeration({{0, 1, 0}, {1, 1}}, 2, 0.5, 0.5,
                                                  10000, 400000);
  const double tv2 = gibbs_tv_against_enumeration({{0, 1}, {2, 3}, {0, 2}}, 4, 0.3,
                                                  0.7, 10000, 400000);
  const bool ok = tv1 <= 0.02 && tv2 <= 0.02;
  report(4, "desk-scale Gibbs exactness", ok,
         "total variation " + fmt(tv1) + " and " + fmt(tv2) +
             " vs enumerated posterior (limit 0.02)");
}

// ---------------------------------------------------------------------
// 5. Sampler invariants over a 1,000-sweep run on the synthetic corpus.

void criterion_5() {
  const Corpus corpus = build_vocabulary(make_synthetic_unbalanced(SyntheticSpec{}), 1);
  TokenDocs docs;
  for (const auto& d : corpus.documents) docs.push_back(d.tokens);

  bool ok = true;
  std::string detail;
  GibbsConfig cfg{4, 0.1, 0.1, 1000, 7};
  GibbsSampler sampler(docs, corpus.vocabulary.size(), cfg);
  try {
    for (int it = 0; it < 1000; ++it) {
      sampler.sweep();
      sampler.check_counts();
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }

  if (ok) {
    const TopicModel model = sampler.estimate();
    for (int k = 0; k < model.topics && ok; ++k) {
      double s = 0.0;
      for (double p : model.phi_row(k)) s += p;
      if (std::abs(s - 1.0) > 1e-9) {
        ok = false;
        detail = "phi row " + std::to_string(k) + " sums to " + fmt(s);
      }
    }
    for (std::size_t d = 0; d < model.docs && ok; ++d) {
      double s = 0.0;
      for (double p : model.theta_row(d)) s += p;
      if (std::abs(s - 1.0) > 1e-9) {
        ok = false;
        detail = "theta row " + std::to_string(d) + " sums to " + fmt(s);
      }
    }
  }
  report(5, "sampler invariants over 1,000 sweeps", ok,
         ok ? "all count invariants held every sweep; rows sum to 1 within 1e-9" : detail);
}

// ---------------------------------------------------------------------
// 6. Central claim at desk scale: CWUTM >= WNTM on scarce-subset purity.

void criterion_6() {
  const Corpus corpus = build_vocabulary(make_synthetic_unbalanced(SyntheticSpec{}), 1);

  ExperimentConfig cfg;
  cfg.models = {ModelKind::Wntm, ModelKind::Cwutm};
  cfg.topics = 4;
  cfg.iterations = 200;
  cfg.runs = 10;
  cfg.base_seed = 1;
  cfg.scarce_threshold = 25;

  const EvalReport rep = run_experiment(cfg, corpus);
  std::size_t scarce_index = 0;
  for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
    if (rep.subsets[s].name == "scarce") scarce_index = s;
  }
  const double wntm = rep.models[0].aggregate[scarce_index].mean.purity;
  const double cwutm = rep.models[1].aggregate[scarce_index].mean.purity;
  const bool ok = cwutm >= wntm;
  report(6, "scarce-subset advantage (directional)", ok,
         "mean scarce purity cwutm " + fmt(cwutm) + " vs wntm " + fmt(wntm) +
             " over 10 runs");
}

// ---------------------------------------------------------------------
// 7. Best-effort reproduction on the public Tweet dataset, when present.

struct PublishedScores {
  // percent, Tweet column
  double full_purity, full_nmi, scarce_purity, scarce_nmi, abundant_purity, abundant_nmi;
};

void criterion_7() {
  const char* env = std::getenv("CWTM_DATA_DIR");
  const std::filesystem::path data_dir = env ? env : "datasets";
  const auto text = data_dir / "tweet.txt";
  const auto labels = data_dir / "tweet.labels";
  if (!std::filesystem::exists(text) || !std::filesystem::exists(labels)) {
    report_skip(7, "published-number reproduction (tweet)",
                "dataset not found at " + text.string() +
                    " (set CWTM_DATA_DIR); declared best-effort");
    return;
  }

  bool ok = true;
  std::string detail;
  const RawCorpus raw = load_corpus(text.string(), labels.string());
  const Corpus corpus = build_vocabulary(raw, 1);
  {
    std::vector<std::string> distinct = corpus.label_set;
    if (corpus.documents.size() != 2472 || distinct.size() != 89) {
      detail += "dataset stats differ from the published table (N=" +
                std::to_string(corpus.documents.size()) +
                ", K=" + std::to_string(distinct.size()) + "); ";
    }
    const UnbalancedSplit split = split_unbalanced(corpus, 15);
    if (split.scarce.label_set.size() != 49 || split.scarce.documents.size() != 335 ||
        split.abundant.label_set.size() != 40 ||
        split.abundant.documents.size() != 2137) {
      detail += "split stats differ (scarce " +
                std::to_string(split.scarce.label_set.size()) + "/" +
                std::to_string(split.scarce.documents.size()) + ", abundant " +
                std::to_string(split.abundant.label_set.size()) + "/" +
                std::to_string(split.abundant.documents.size()) + "); ";
    }
  }

  ExperimentConfig cfg;
  cfg.models = parse_models("all");
  cfg.topics = 89;
  cfg.runs = 10;
  cfg.scarce_threshold = 15;
  const EvalReport rep = run_experiment(cfg, corpus);

  const PublishedScores published[3] = {
      {78.32, 78.02, 75.94, 85.94, 88.38, 80.05},  // lda
      {82.40, 82.72, 75.28, 86.88, 89.42, 83.38},  // wntm
      {74.79, 75.86, 76.60, 85.63, 82.55, 75.69},  // cwutm
  };
  const double tolerance = 5.0;  // absolute points
  for (std::size_t m = 0; m < rep.models.size(); ++m) {
    for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
      const double got_p = rep.models[m].aggregate[s].mean.purity * 100.0;
      const double got_n = rep.models[m].aggregate[s].mean.nmi * 100.0;
      double want_p = 0, want_n = 0;
      if (rep.subsets[s].name == "full") {
        want_p = published[m].full_purity;
        want_n = published[m].full_nmi;
      } else if (rep.subsets[s].name == "scarce") {
        want_p = published[m].scarce_purity;
        want_n = published[m].scarce_nmi;
      } else {
        want_p = published[m].abundant_purity;
        want_n = published[m].abundant_nmi;
      }
      if (std::abs(got_p - want_p) > tolerance || std::abs(got_n - want_n) > tolerance) {
        ok = false;
        detail += to_string(rep.models[m].model) + "/" + rep.subsets[s].name +
                  ": purity " + fmt(got_p) + " vs " + fmt(want_p) + ", nmi " +
                  fmt(got_n) + " vs " + fmt(want_n) + "; ";
      }
    }
  }
  report(7, "published-number reproduction (tweet)", ok,
         ok ? "all model/subset means within 5 points" + (detail.empty() ? "" : "; " + detail)
            : detail);
}

// ---------------------------------------------------------------------
// 8. Determinism of whole experiments.

nlohmann::json stripped(const EvalReport& rep) {
  auto j = nlohmann::json::parse(report_json(rep));
  j.erase("timing");
  return j;
}

void criterion_8() {
  SyntheticSpec spec;
  spec.docs_per_abundant = 60;
  spec.docs_per_scarce = 12;
  const Corpus corpus = build_vocabulary(make_synthetic_unbalanced(spec), 1);

  ExperimentConfig cfg;
  cfg.models = parse_models("all");
  cfg.topics = 4;
  cfg.iterations = 50;
  cfg.runs = 2;
  cfg.scarce_threshold = 12;
  cfg.threads = 2;

  const EvalReport r1 = run_experiment(cfg, corpus);
  cfg.threads = 1;  // scheduling must not leak into results
  const EvalReport r2 = run_experiment(cfg, corpus);

  bool ok = stripped(r1) == stripped(r2);
  std::string detail = ok ? "reports identical (timing aside), independent of threads"
                          : "payloads differ between identical configs";

  if (ok) {
    oracle::TempDir dir;
    emit_report(r1, dir.file("a"));
    emit_report(r2, dir.file("b"));
    if (oracle::read_file(dir.file("a/report.csv")) != oracle::read_file(dir.file("b/report.csv")) ||
        oracle::read_file(dir.file("a/report.txt")) != oracle::read_file(dir.file("b/report.txt"))) {
      ok = false;
      detail = "emitted csv/txt bytes differ";
    }
  }
  report(8, "experiment determinism", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::printf("all acceptance criteria passed (skips noted above)\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures;
}
