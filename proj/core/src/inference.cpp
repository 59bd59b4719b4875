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

#include "cwtm/inference.hpp"

#include <fstream>
#include <stdexcept>

namespace cwtm {

namespace {

DocTopicDistribution uniform_distribution(int topics) {
  DocTopicDistribution dist;
  dist.probs.assign(topics, 1.0 / static_cast<double>(topics));
  dist.cluster = 0;
  return dist;
}

}  // namespace

int assign_cluster(const std::vector<double>& dist) {
  if (dist.empty()) throw std::invalid_argument("empty distribution");
  int best = 0;
  for (int k = 1; k < static_cast<int>(dist.size()); ++k) {
    if (dist[k] > dist[best]) best = k;
  }
  return best;
}

DocTopicDistribution doc_topics(const Document& doc, const TopicModel& word_model) {
  const int K = word_model.topics;
  std::vector<double> acc(K, 0.0);
  std::int64_t retained = 0;
  for (WordId w : doc.tokens) {
    if (w >= word_model.docs || !word_model.trained[w]) continue;
    const auto row = word_model.theta_row(w);
    for (int k = 0; k < K; ++k) acc[k] += row[k];
    ++retained;
  }
  if (retained == 0) return uniform_distribution(K);

  // Each theta row sums to 1, so dividing by the retained token count is
  // exactly the renormalized Eq.-style mixture (the 1/Len(d) cancels).
  DocTopicDistribution dist;
  dist.probs.resize(K);
  for (int k = 0; k < K; ++k) dist.probs[k] = acc[k] / static_cast<double>(retained);
  dist.cluster = assign_cluster(dist.probs);
  return dist;
}

DocTopicDistribution lda_fold_in(const Document& doc, const TopicModel& doc_model) {
  const int K = doc_model.topics;
  std::vector<double> acc(K, 0.0);
  std::int64_t used = 0;
  for (WordId w : doc.tokens) {
    if (w >= doc_model.vocab) continue;
    double col_sum = 0.0;
    for (int k = 0; k < K; ++k) col_sum += doc_model.phi[std::size_t(k) * doc_model.vocab + w];
    if (!(col_sum > 0.0)) continue;
    for (int k = 0; k < K; ++k) {
      acc[k] += doc_model.phi[std::size_t(k) * doc_model.vocab + w] / col_sum;
    }
    ++used;
  }
  if (used == 0) return uniform_distribution(K);

  DocTopicDistribution dist;
  dist.probs.resize(K);
  for (int k = 0; k < K; ++k) dist.probs[k] = acc[k] / static_cast<double>(used);
  dist.cluster = assign_cluster(dist.probs);
  return dist;
}

std::vector<int> cluster_by_word_model(const Corpus& corpus,
                                       const TopicModel& word_model) {
  std::vector<int> clusters;
  clusters.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    clusters.push_back(doc_topics(doc, word_model).cluster);
  }
  return clusters;
}

std::vector<int> cluster_by_doc_model(const Corpus& corpus,
                                      const TopicModel& doc_model,
                                      std::size_t* folded) {
  if (corpus.documents.size() != doc_model.docs) {
    throw std::invalid_argument("model was trained on a different corpus");
  }
  std::size_t fold_count = 0;
  std::vector<int> clusters;
  clusters.reserve(corpus.documents.size());
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    if (doc_model.trained[d]) {
      const auto row = doc_model.theta_row(d);
      clusters.push_back(assign_cluster({row.begin(), row.end()}));
    } else {
      clusters.push_back(lda_fold_in(corpus.documents[d], doc_model).cluster);
      ++fold_count;
    }
  }
  if (folded) *folded = fold_count;
  return clusters;
}

void write_assignments(const Corpus& corpus, const std::vector<int>& clusters,
                       const std::string& path) {
  if (clusters.size() != corpus.documents.size()) {
    throw std::invalid_argument("assignment/document count mismatch");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "doc_id,cluster,label\n";
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    out << corpus.documents[d].doc_id << ',' << clusters[d] << ','
        << corpus.documents[d].label << '\n';
  }
}

}  // namespace cwtm
