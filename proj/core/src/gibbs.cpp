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

#include "cwtm/gibbs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cwtm {

void GibbsConfig::validate() const {
  if (topics < 1) throw std::invalid_argument("topics must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
}

GibbsSampler::GibbsSampler(const TokenDocs& docs, std::size_t vocab_size,
                           const GibbsConfig& cfg)
    : docs_(docs), cfg_(cfg), rng_(cfg.seed) {
  if (cfg_.topics < 1) throw std::invalid_argument("topics must be >= 1");
  if (!(cfg_.alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (!(cfg_.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (vocab_size == 0) throw std::runtime_error("empty vocabulary");

  const int K = cfg_.topics;
  state_.num_docs = docs.size();
  state_.vocab = vocab_size;
  state_.topics = K;
  state_.z.resize(docs.size());
  state_.doc_topic.assign(docs.size() * K, 0);
  state_.word_topic.assign(vocab_size * K, 0);
  state_.topic_total.assign(K, 0);
  state_.doc_total.assign(docs.size(), 0);
  cumulative_.resize(K);

  std::int64_t total = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto& doc = docs[d];
    state_.z[d].resize(doc.size());
    state_.doc_total[d] = static_cast<std::int64_t>(doc.size());
    total += static_cast<std::int64_t>(doc.size());
    for (std::size_t n = 0; n < doc.size(); ++n) {
      if (doc[n] >= vocab_size) {
        throw std::runtime_error("token id out of vocabulary range");
      }
      const int k = static_cast<int>(rng_.next_below(static_cast<std::uint32_t>(K)));
      state_.z[d][n] = k;
      ++state_.doc_topic[d * K + k];
      ++state_.word_topic[std::size_t(doc[n]) * K + k];
      ++state_.topic_total[k];
    }
  }
  if (total == 0) {
    throw std::runtime_error("all documents are empty, nothing to sample");
  }
}

void GibbsSampler::sweep() {
  const int K = cfg_.topics;
  const double beta_sum = cfg_.beta * static_cast<double>(state_.vocab);

  for (std::size_t d = 0; d < docs_.size(); ++d) {
    const auto& doc = docs_[d];
    std::int64_t* dt = state_.doc_topic.data() + d * K;
    for (std::size_t n = 0; n < doc.size(); ++n) {
      const WordId w = doc[n];
      std::int64_t* wt = state_.word_topic.data() + std::size_t(w) * K;
      const int old_k = state_.z[d][n];

      --dt[old_k];
      --wt[old_k];
      --state_.topic_total[old_k];
      if (dt[old_k] < 0 || wt[old_k] < 0 || state_.topic_total[old_k] < 0) {
        throw std::runtime_error("negative count during sweep");
      }

      double sum = 0.0;
      for (int k = 0; k < K; ++k) {
        sum += (static_cast<double>(dt[k]) + cfg_.alpha) *
               (static_cast<double>(wt[k]) + cfg_.beta) /
               (static_cast<double>(state_.topic_total[k]) + beta_sum);
        cumulative_[k] = sum;
      }
      if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw std::runtime_error("invalid sampling weights during sweep");
      }

      const double u = rng_.next_double() * sum;
      int new_k = K - 1;
      for (int k = 0; k < K; ++k) {
        if (cumulative_[k] > u) {
          new_k = k;
          break;
        }
      }

      state_.z[d][n] = static_cast<std::int32_t>(new_k);
      ++dt[new_k];
      ++wt[new_k];
      ++state_.topic_total[new_k];
    }
  }
  ++sweeps_done_;
}

TopicModel GibbsSampler::estimate() const {
  const int K = cfg_.topics;
  const std::size_t V = state_.vocab;
  const std::size_t D = state_.num_docs;

  TopicModel model;
  model.topics = K;
  model.vocab = V;
  model.docs = D;
  model.phi.resize(std::size_t(K) * V);
  model.theta.resize(D * K);
  model.trained.resize(D);

  const double beta_sum = cfg_.beta * static_cast<double>(V);
  for (int k = 0; k < K; ++k) {
    const double denom = static_cast<double>(state_.topic_total[k]) + beta_sum;
    double* row = model.phi.data() + std::size_t(k) * V;
    for (std::size_t w = 0; w < V; ++w) {
      row[w] = (static_cast<double>(state_.word_topic[w * K + k]) + cfg_.beta) / denom;
    }
  }

  const double alpha_sum = cfg_.alpha * static_cast<double>(K);
  for (std::size_t d = 0; d < D; ++d) {
    double* row = model.theta.data() + d * K;
    model.trained[d] = state_.doc_total[d] > 0;
    if (!model.trained[d]) {
      // Empty documents are excluded from training; give them the flat row.
      for (int k = 0; k < K; ++k) row[k] = 1.0 / static_cast<double>(K);
      continue;
    }
    const double denom = static_cast<double>(state_.doc_total[d]) + alpha_sum;
    for (int k = 0; k < K; ++k) {
      row[k] = (static_cast<double>(state_.doc_topic[d * K + k]) + cfg_.alpha) / denom;
    }
  }
  return model;
}

void GibbsSampler::check_counts() const {
  const int K = cfg_.topics;
  const auto fail = [](const std::string& what) {
    throw std::runtime_error("gibbs count invariant violated: " + what);
  };

  std::vector<std::int64_t> topic_from_docs(K, 0);
  for (std::size_t d = 0; d < state_.num_docs; ++d) {
    std::int64_t row_sum = 0;
    for (int k = 0; k < K; ++k) row_sum += state_.doc_topic[d * K + k];
    if (row_sum != state_.doc_total[d]) fail("sum_k n_dk != n_d");
    if (state_.doc_total[d] != static_cast<std::int64_t>(docs_[d].size())) {
      fail("n_d != document length");
    }
    for (std::int32_t zk : state_.z[d]) {
      if (zk < 0 || zk >= K) fail("z out of [0, K)");
      ++topic_from_docs[zk];
    }
  }

  std::vector<std::int64_t> topic_from_words(K, 0);
  for (std::size_t w = 0; w < state_.vocab; ++w) {
    for (int k = 0; k < K; ++k) topic_from_words[k] += state_.word_topic[w * K + k];
  }

  std::int64_t grand_total = 0;
  for (int k = 0; k < K; ++k) {
    if (topic_from_words[k] != state_.topic_total[k]) fail("sum_w n_kw != n_k");
    if (topic_from_docs[k] != state_.topic_total[k]) fail("z histogram != n_k");
    if (state_.topic_total[k] < 0) fail("negative n_k");
    grand_total += state_.topic_total[k];
  }

  std::int64_t tokens = 0;
  for (const auto& doc : docs_) tokens += static_cast<std::int64_t>(doc.size());
  if (grand_total != tokens) fail("sum_k n_k != total tokens");
}

TopicModel run_gibbs(const TokenDocs& docs, std::size_t vocab_size,
                     const GibbsConfig& cfg) {
  cfg.validate();
  GibbsSampler sampler(docs, vocab_size, cfg);
  for (int it = 0; it < cfg.iterations; ++it) sampler.sweep();
  return sampler.estimate();
}

}  // namespace cwtm
