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
#include <span>
#include <vector>

#include "cwtm/corpus.hpp"
#include "cwtm/rng.hpp"

namespace cwtm {

/// Token-id documents in training form. Real documents, WNTM pseudo-docs
/// and CWUTM pseudo-docs all reduce to this, so one sampler serves all
/// three models.
using TokenDocs = std::vector<std::vector<WordId>>;

struct GibbsConfig {
  int topics = 0;        // K
  double alpha = 0.1;    // symmetric Dirichlet on doc-topic
  double beta = 0.1;     // symmetric Dirichlet on topic-word
  int iterations = 1000; // full sweeps
  std::uint64_t seed = 1;

  // topics >= 1 (the degenerate single topic is legal), alpha/beta > 0,
  // iterations >= 1.
  void validate() const;
};

/// Per-token assignments plus the count arrays driving collapsed sampling.
/// Invariants (checked by check_counts):
///   sum_k doc_topic(d,k) = doc_total(d) = |tokens of d|
///   sum_w n_kw(k,w)      = topic_total(k)
///   sum_k topic_total(k) = total training tokens
///   every z in [0, K)
struct GibbsState {
  std::size_t num_docs = 0;
  std::size_t vocab = 0;
  int topics = 0;

  std::vector<std::vector<std::int32_t>> z;  // per doc, per token
  std::vector<std::int64_t> doc_topic;       // D x K, n_dk
  std::vector<std::int64_t> word_topic;      // V x K, n_kw in word-major layout
  std::vector<std::int64_t> topic_total;     // K, n_k
  std::vector<std::int64_t> doc_total;       // D, n_d

  std::int64_t n_dk(std::size_t d, int k) const { return doc_topic[d * topics + k]; }
  std::int64_t n_kw(int k, WordId w) const { return word_topic[std::size_t(w) * topics + k]; }
};

/// Row-stochastic estimates smoothed by the Dirichlet priors.
struct TopicModel {
  int topics = 0;
  std::size_t vocab = 0;
  std::size_t docs = 0;

  std::vector<double> phi;    // K x V, phi(k,w) = (n_kw + beta) / (n_k + V beta)
  std::vector<double> theta;  // D x K, theta(d,k) = (n_dk + alpha) / (n_d + K alpha)
  std::vector<bool> trained;  // docs that took part in training (non-empty)

  std::span<const double> phi_row(int k) const {
    return {phi.data() + std::size_t(k) * vocab, vocab};
  }
  std::span<const double> theta_row(std::size_t d) const {
    return {theta.data() + d * topics, std::size_t(topics)};
  }
};

/// Collapsed Gibbs sampler. Construction randomly assigns a topic to every
/// token of every non-empty document from the seeded RNG; each sweep()
/// resamples all tokens once, in document then token order, from
///   p(z = k | rest) ~ (n_dk + alpha) (n_kw + beta) / (n_k + V beta)
/// with the current token excluded from the counts. One chain is strictly
/// sequential; run independent chains (distinct seeds) for parallelism.
///
/// The sampler keeps a reference to `docs`; the caller owns it for the
/// sampler's lifetime.
class GibbsSampler {
 public:
  GibbsSampler(const TokenDocs& docs, std::size_t vocab_size, const GibbsConfig& cfg);

  void sweep();
  TopicModel estimate() const;

  const GibbsState& state() const { return state_; }
  int sweeps_done() const { return sweeps_done_; }

  // Throws on any violated count invariant.
  void check_counts() const;

 private:
  const TokenDocs& docs_;
  GibbsConfig cfg_;
  Rng rng_;
  GibbsState state_;
  std::vector<double> cumulative_;  // K scratch for the linear-scan draw
  int sweeps_done_ = 0;
};

// init + iterations x sweep + estimate. Deterministic given (docs, cfg).
TopicModel run_gibbs(const TokenDocs& docs, std::size_t vocab_size,
                     const GibbsConfig& cfg);

}  // namespace cwtm
