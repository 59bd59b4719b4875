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

#include "cwtm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cwtm {

namespace {

template <typename Label>
ContingencyTable build_table(const std::vector<int>& clusters,
                             const std::vector<Label>& labels) {
  if (clusters.size() != labels.size()) {
    throw std::invalid_argument("cluster/label length mismatch");
  }
  if (clusters.empty()) throw std::invalid_argument("empty evaluation input");

  std::unordered_map<Label, int> class_index;
  std::unordered_map<int, int> cluster_index;
  for (const auto& l : labels) class_index.try_emplace(l, static_cast<int>(class_index.size()));
  for (int c : clusters) cluster_index.try_emplace(c, static_cast<int>(cluster_index.size()));

  ContingencyTable t;
  t.docs = static_cast<std::int64_t>(labels.size());
  t.cells.assign(class_index.size(), std::vector<std::int64_t>(cluster_index.size(), 0));
  t.class_total.assign(class_index.size(), 0);
  t.cluster_total.assign(cluster_index.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int h = class_index.at(labels[i]);
    const int l = cluster_index.at(clusters[i]);
    ++t.cells[h][l];
    ++t.class_total[h];
    ++t.cluster_total[l];
  }
  return t;
}

// True when every nonzero cell is the only nonzero in both its row and its
// column, i.e. the clustering is a relabeling of the classes.
bool is_bijective_match(const ContingencyTable& t) {
  std::vector<int> row_nonzero(t.class_total.size(), 0);
  std::vector<int> col_nonzero(t.cluster_total.size(), 0);
  for (std::size_t h = 0; h < t.cells.size(); ++h) {
    for (std::size_t l = 0; l < t.cells[h].size(); ++l) {
      if (t.cells[h][l] != 0) {
        ++row_nonzero[h];
        ++col_nonzero[l];
      }
    }
  }
  return std::all_of(row_nonzero.begin(), row_nonzero.end(), [](int n) { return n == 1; }) &&
         std::all_of(col_nonzero.begin(), col_nonzero.end(), [](int n) { return n == 1; });
}

}  // namespace

ContingencyTable ContingencyTable::from(const std::vector<int>& clusters,
                                        const std::vector<std::string>& labels) {
  return build_table(clusters, labels);
}

ContingencyTable ContingencyTable::from(const std::vector<int>& clusters,
                                        const std::vector<int>& labels) {
  return build_table(clusters, labels);
}

double purity(const ContingencyTable& t) {
  if (t.docs == 0) throw std::invalid_argument("empty contingency table");
  std::int64_t hits = 0;
  for (std::size_t l = 0; l < t.cluster_total.size(); ++l) {
    std::int64_t best = 0;
    for (std::size_t h = 0; h < t.cells.size(); ++h) {
      best = std::max(best, t.cells[h][l]);
    }
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(t.docs);
}

double nmi(const ContingencyTable& t) {
  if (t.docs == 0) throw std::invalid_argument("empty contingency table");
  if (t.class_total.size() < 2 || t.cluster_total.size() < 2) return 0.0;
  if (is_bijective_match(t)) return 1.0;

  const double D = static_cast<double>(t.docs);
  double numerator = 0.0;
  for (std::size_t h = 0; h < t.cells.size(); ++h) {
    for (std::size_t l = 0; l < t.cells[h].size(); ++l) {
      const double d_hl = static_cast<double>(t.cells[h][l]);
      if (d_hl == 0.0) continue;  // 0 log 0 = 0
      numerator += d_hl * std::log(D * d_hl /
                                   (static_cast<double>(t.class_total[h]) *
                                    static_cast<double>(t.cluster_total[l])));
    }
  }

  // Both factors are <= 0 (negated entropies); the product under the root
  // uses their absolute values.
  double class_term = 0.0, cluster_term = 0.0;
  for (std::int64_t d_h : t.class_total) {
    if (d_h > 0) class_term += static_cast<double>(d_h) * std::log(static_cast<double>(d_h) / D);
  }
  for (std::int64_t c_l : t.cluster_total) {
    if (c_l > 0) cluster_term += static_cast<double>(c_l) * std::log(static_cast<double>(c_l) / D);
  }
  const double denom = std::sqrt(std::abs(class_term) * std::abs(cluster_term));
  if (!(denom > 0.0)) return 0.0;

  return std::clamp(numerator / denom, 0.0, 1.0);
}

double purity(const std::vector<int>& clusters, const std::vector<std::string>& labels) {
  return purity(ContingencyTable::from(clusters, labels));
}
double purity(const std::vector<int>& clusters, const std::vector<int>& labels) {
  return purity(ContingencyTable::from(clusters, labels));
}
double nmi(const std::vector<int>& clusters, const std::vector<std::string>& labels) {
  return nmi(ContingencyTable::from(clusters, labels));
}
double nmi(const std::vector<int>& clusters, const std::vector<int>& labels) {
  return nmi(ContingencyTable::from(clusters, labels));
}

}  // namespace cwtm
