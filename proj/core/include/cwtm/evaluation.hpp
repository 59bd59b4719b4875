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
#include <vector>

namespace cwtm {

/// Gold-class x cluster document counts with marginals.
struct ContingencyTable {
  std::vector<std::vector<std::int64_t>> cells;  // [class h][cluster l] = d_hl
  std::vector<std::int64_t> class_total;         // d_h
  std::vector<std::int64_t> cluster_total;       // c_l
  std::int64_t docs = 0;                         // D

  static ContingencyTable from(const std::vector<int>& clusters,
                               const std::vector<std::string>& labels);
  static ContingencyTable from(const std::vector<int>& clusters,
                               const std::vector<int>& labels);
};

// Fraction of documents belonging to the majority gold class of their
// cluster: (1/D) sum_clusters max_class d_hl. In [0, 1]; a bijective
// relabeling scores exactly 1.
double purity(const ContingencyTable& table);

// Mutual information of clusters and classes over the geometric mean of
// the two entropies, natural log, 0 log 0 = 0. Returns 0 by convention
// when either side is a single block (a denominator factor vanishes), and
// exactly 1 when the clustering matches the classes one-to-one.
double nmi(const ContingencyTable& table);

// Convenience overloads; inputs must be nonempty and equal length.
double purity(const std::vector<int>& clusters, const std::vector<std::string>& labels);
double purity(const std::vector<int>& clusters, const std::vector<int>& labels);
double nmi(const std::vector<int>& clusters, const std::vector<std::string>& labels);
double nmi(const std::vector<int>& clusters, const std::vector<int>& labels);

}  // namespace cwtm
