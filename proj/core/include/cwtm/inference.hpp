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

#include <string>
#include <vector>

#include "cwtm/corpus.hpp"
#include "cwtm/gibbs.hpp"

namespace cwtm {

/// Topic mixture of one document plus its hard cluster.
struct DocTopicDistribution {
  std::vector<double> probs;  // sums to 1 (uniform for degenerate docs)
  int cluster = 0;            // argmax; ties break to the lowest index
};

// Index of the maximum entry, lowest index on ties. Pure.
int assign_cluster(const std::vector<double>& dist);

// P(z|d) = sum_i theta_{i,z} n_d(w_i) / Len(d) over the document's words,
// where `word_model` is the Gibbs output on a pseudo-corpus (theta row i
// belongs to vocabulary word i). Words whose pseudo-document was empty
// (pruned out of the network) are skipped and the mixture is renormalized
// over the rest; documents with nothing retained get the uniform vector.
DocTopicDistribution doc_topics(const Document& doc, const TopicModel& word_model);

// LDA fold-in for documents without a trained theta row: one-step
// responsibilities P(z|w) = phi(z,w) / sum_z' phi(z',w), averaged under the
// in-document word frequencies. Uniform for empty documents.
DocTopicDistribution lda_fold_in(const Document& doc, const TopicModel& doc_model);

// Hard assignments for every document of `corpus` (which must be the
// corpus the pseudo-corpus was built from: theta rows index its words).
std::vector<int> cluster_by_word_model(const Corpus& corpus,
                                       const TopicModel& word_model);

// LDA route: documents cluster by their own trained theta row; documents
// without one (empty, or absent from training) fall back to fold-in.
// `corpus` must be the corpus the model was trained on, rows by position.
// When `folded` is given it receives the number of fold-in fallbacks.
std::vector<int> cluster_by_doc_model(const Corpus& corpus,
                                      const TopicModel& doc_model,
                                      std::size_t* folded = nullptr);

// CSV dump: doc_id,cluster,label
void write_assignments(const Corpus& corpus, const std::vector<int>& clusters,
                       const std::string& path);

}  // namespace cwtm
