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

#include "cwtm/cooc_network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace cwtm {

void scan_windows(const Document& doc, int window_size, PairCounts& counts) {
  if (window_size < 2) throw std::invalid_argument("window_size must be >= 2");
  const auto& t = doc.tokens;
  const std::int64_t len = static_cast<std::int64_t>(t.size());
  if (len < 2) return;

  if (len < window_size) {
    // Whole document is one window.
    for (std::int64_t i = 0; i < len; ++i) {
      for (std::int64_t j = i + 1; j < len; ++j) {
        if (t[i] != t[j]) ++counts[pair_key(t[i], t[j])];
      }
    }
    return;
  }

  // A position pair (i, j) lies in every window start s with
  // max(0, j - w + 1) <= s <= min(i, len - w); summing that count per pair
  // equals enumerating all windows directly.
  const std::int64_t last_start = len - window_size;
  for (std::int64_t i = 0; i < len; ++i) {
    const std::int64_t j_end = std::min(i + window_size - 1, len - 1);
    for (std::int64_t j = i + 1; j <= j_end; ++j) {
      if (t[i] == t[j]) continue;
      const std::int64_t lo = std::max<std::int64_t>(0, j - window_size + 1);
      const std::int64_t hi = std::min(i, last_start);
      counts[pair_key(t[i], t[j])] += hi - lo + 1;
    }
  }
}

RawCoocNetwork build_raw_network(const Corpus& corpus, int window_size) {
  if (window_size < 2) throw std::invalid_argument("window_size must be >= 2");
  RawCoocNetwork net;
  net.vocab_size = corpus.vocabulary.size();
  for (const auto& doc : corpus.documents) {
    scan_windows(doc, window_size, net.pair_count);
  }
  net.node_marginal.assign(net.vocab_size, 0);
  for (const auto& [key, c] : net.pair_count) {
    net.node_marginal[pair_lo(key)] += c;
    net.node_marginal[pair_hi(key)] += c;
    net.total_pairs += c;
  }
  return net;
}

WeightedCoocNetwork weight_and_prune(const RawCoocNetwork& raw) {
  WeightedCoocNetwork net;
  net.vocab_size = raw.vocab_size;
  if (raw.total_pairs == 0) {
    std::cerr << "warning: empty co-occurrence network, nothing to weight\n";
    return net;
  }
  const double total = static_cast<double>(raw.total_pairs);
  for (const auto& [key, c] : raw.pair_count) {
    const double p_xy = static_cast<double>(c) / total;
    const double p_x = static_cast<double>(raw.node_marginal[pair_lo(key)]) / (2.0 * total);
    const double p_y = static_cast<double>(raw.node_marginal[pair_hi(key)]) / (2.0 * total);
    const double degree = std::log(p_xy / (p_x * p_y));
    if (degree > 0.0) net.degree.emplace(key, degree);
  }
  return net;
}

void write_edge_list(const RawCoocNetwork& raw, const WeightedCoocNetwork& weighted,
                     const Vocabulary& vocab, const std::string& path) {
  struct Row {
    std::string x, y;
    std::int64_t count;
    double degree;
  };
  std::vector<Row> rows;
  rows.reserve(raw.pair_count.size());
  for (const auto& [key, c] : raw.pair_count) {
    std::string a = vocab.words.at(pair_lo(key));
    std::string b = vocab.words.at(pair_hi(key));
    if (b < a) std::swap(a, b);
    rows.push_back({std::move(a), std::move(b), c,
                    weighted.degree_of(pair_lo(key), pair_hi(key))});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.12g", r.degree);
    out << r.x << '\t' << r.y << '\t' << r.count << '\t' << buf << '\n';
  }
}

}  // namespace cwtm
