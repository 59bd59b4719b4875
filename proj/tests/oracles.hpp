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

// Test-only reference implementations, deliberately written along different
// routes than the library: the window oracle enumerates every window
// position, the NMI oracle goes through entropies, and the Gibbs oracle
// integrates the mixture out analytically on tiny inputs.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "cwtm/cooc_network.hpp"
#include "cwtm/gibbs.hpp"

namespace cwtm::testing {

// Literal sliding-window enumeration: every window start, every token pair
// inside the window.
inline PairCounts brute_force_scan(const std::vector<WordId>& tokens, int window) {
  PairCounts counts;
  const std::int64_t len = static_cast<std::int64_t>(tokens.size());
  const std::int64_t num_windows = std::max<std::int64_t>(len - window + 1, 1);
  for (std::int64_t s = 0; s < num_windows; ++s) {
    const std::int64_t end = std::min(s + window, len);
    for (std::int64_t i = s; i < end; ++i) {
      for (std::int64_t j = i + 1; j < end; ++j) {
        if (tokens[i] != tokens[j]) ++counts[pair_key(tokens[i], tokens[j])];
      }
    }
  }
  return counts;
}

inline PairCounts brute_force_network(const std::vector<std::vector<WordId>>& docs,
                                      int window) {
  PairCounts counts;
  for (const auto& doc : docs) {
    for (const auto& [key, c] : brute_force_scan(doc, window)) counts[key] += c;
  }
  return counts;
}

// Purity straight from the definition: per cluster, count the majority
// class by scanning the raw assignment vectors.
inline double purity_oracle(const std::vector<int>& clusters,
                            const std::vector<int>& labels) {
  std::map<int, std::map<int, std::int64_t>> per_cluster;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    ++per_cluster[clusters[i]][labels[i]];
  }
  std::int64_t hits = 0;
  for (const auto& [cluster, histogram] : per_cluster) {
    std::int64_t best = 0;
    for (const auto& [label, n] : histogram) best = std::max(best, n);
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(clusters.size());
}

// NMI through entropy arithmetic, MI = H(class) + H(cluster) - H(joint),
// in the given log base (the value must be base-invariant).
inline double nmi_entropy_oracle(const std::vector<int>& clusters,
                                 const std::vector<int>& labels,
                                 double log_base = std::exp(1.0)) {
  const double n = static_cast<double>(clusters.size());
  const double lb = std::log(log_base);
  std::map<int, std::int64_t> class_count, cluster_count;
  std::map<std::pair<int, int>, std::int64_t> joint;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    ++class_count[labels[i]];
    ++cluster_count[clusters[i]];
    ++joint[{labels[i], clusters[i]}];
  }
  auto entropy = [&](const auto& counts) {
    double h = 0.0;
    for (const auto& [k, c] : counts) {
      const double p = static_cast<double>(c) / n;
      h -= p * std::log(p) / lb;
    }
    return h;
  };
  const double h_class = entropy(class_count);
  const double h_cluster = entropy(cluster_count);
  if (h_class == 0.0 || h_cluster == 0.0) return 0.0;
  const double mi = h_class + h_cluster - entropy(joint);
  return mi / std::sqrt(h_class * h_cluster);
}

// Exact collapsed posterior over full assignment vectors for tiny corpora:
// P(z | w) with theta and phi integrated out. Assignments are indexed in
// base K over the tokens flattened in document order.
inline std::vector<double> collapsed_posterior(const TokenDocs& docs,
                                               std::size_t vocab, int topics,
                                               double alpha, double beta) {
  std::size_t total_tokens = 0;
  for (const auto& d : docs) total_tokens += d.size();
  std::size_t num_assignments = 1;
  for (std::size_t t = 0; t < total_tokens; ++t) num_assignments *= topics;

  std::vector<double> log_probs(num_assignments);
  std::vector<int> z(total_tokens);
  for (std::size_t a = 0; a < num_assignments; ++a) {
    std::size_t rem = a;
    for (std::size_t t = 0; t < total_tokens; ++t) {
      z[t] = static_cast<int>(rem % topics);
      rem /= topics;
    }
    std::vector<std::int64_t> n_dk(docs.size() * topics, 0);
    std::vector<std::int64_t> n_kw(static_cast<std::size_t>(topics) * vocab, 0);
    std::vector<std::int64_t> n_k(topics, 0);
    std::size_t t = 0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (WordId w : docs[d]) {
        const int k = z[t++];
        ++n_dk[d * topics + k];
        ++n_kw[static_cast<std::size_t>(k) * vocab + w];
        ++n_k[k];
      }
    }
    double lp = 0.0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (int k = 0; k < topics; ++k) {
        lp += std::lgamma(static_cast<double>(n_dk[d * topics + k]) + alpha) -
              std::lgamma(alpha);
      }
    }
    for (int k = 0; k < topics; ++k) {
      for (std::size_t w = 0; w < vocab; ++w) {
        lp += std::lgamma(static_cast<double>(n_kw[static_cast<std::size_t>(k) * vocab + w]) + beta) -
              std::lgamma(beta);
      }
      lp -= std::lgamma(static_cast<double>(n_k[k]) + beta * static_cast<double>(vocab));
    }
    log_probs[a] = lp;
  }

  const double max_lp = *std::max_element(log_probs.begin(), log_probs.end());
  double sum = 0.0;
  for (double& lp : log_probs) {
    lp = std::exp(lp - max_lp);
    sum += lp;
  }
  for (double& p : log_probs) p /= sum;
  return log_probs;
}

// Canonical form under topic relabeling: topics renamed in order of first
// appearance, so permuted assignments collapse onto one representative.
inline std::size_t canonical_assignment(std::size_t assignment, std::size_t total_tokens,
                                        int topics) {
  std::vector<int> z(total_tokens);
  std::size_t rem = assignment;
  for (std::size_t t = 0; t < total_tokens; ++t) {
    z[t] = static_cast<int>(rem % topics);
    rem /= topics;
  }
  std::vector<int> rename(topics, -1);
  int next = 0;
  for (auto& k : z) {
    if (rename[k] < 0) rename[k] = next++;
    k = rename[k];
  }
  std::size_t index = 0;
  for (std::size_t t = total_tokens; t-- > 0;) {
    index = index * topics + static_cast<std::size_t>(z[t]);
  }
  return index;
}

}  // namespace cwtm::testing
