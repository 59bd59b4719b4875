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
#include <unordered_map>

#include "cwtm/corpus.hpp"

namespace cwtm {

// Unordered word pair packed into one key (smaller id in the high half).
inline std::uint64_t pair_key(WordId x, WordId y) {
  const WordId lo = x < y ? x : y;
  const WordId hi = x < y ? y : x;
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}
inline WordId pair_lo(std::uint64_t key) { return static_cast<WordId>(key >> 32); }
inline WordId pair_hi(std::uint64_t key) { return static_cast<WordId>(key & 0xffffffffu); }

using PairCounts = std::unordered_map<std::uint64_t, std::int64_t>;

/// Symmetric raw co-occurrence counts accumulated over all sliding-window
/// positions, with per-word marginals. No self-loops.
struct RawCoocNetwork {
  PairCounts pair_count;
  std::vector<std::int64_t> node_marginal;  // word -> sum of its pair counts
  std::int64_t total_pairs = 0;             // sum of all pair counts
  std::size_t vocab_size = 0;

  std::int64_t count(WordId x, WordId y) const {
    auto it = pair_count.find(pair_key(x, y));
    return it == pair_count.end() ? 0 : it->second;
  }
};

// Counts every unordered pair of distinct words sharing a window position,
// once per position pair per window. The window advances one token at a
// time; a document of length L yields max(L - window_size + 1, 1) windows,
// so a document shorter than the window is scanned as a single window.
// Overlapping windows make adjacent pairs count more often than distant
// ones.
void scan_windows(const Document& doc, int window_size, PairCounts& counts);

RawCoocNetwork build_raw_network(const Corpus& corpus, int window_size);

/// PMI-weighted, pruned network: an edge survives only with a strictly
/// positive activity degree.
struct WeightedCoocNetwork {
  std::unordered_map<std::uint64_t, double> degree;
  std::size_t vocab_size = 0;

  // 0 for pruned or never-seen pairs.
  double degree_of(WordId x, WordId y) const {
    auto it = degree.find(pair_key(x, y));
    return it == degree.end() ? 0.0 : it->second;
  }
  std::size_t edge_count() const { return degree.size(); }
};

// degree(x,y) = max(ln[p(x,y) / (p(x) p(y))], 0) with
//   p(x,y) = pair_count(x,y) / total_pairs
//   p(w)   = node_marginal(w) / (2 * total_pairs)
// Edges at or below zero (independent or anti-correlated words) are
// removed. An empty raw network yields an empty result with a warning.
WeightedCoocNetwork weight_and_prune(const RawCoocNetwork& raw);

// Debug/oracle dump: `word_x \t word_y \t raw_count \t degree` per edge
// (degree 0 when pruned), words in lexical order within and across lines.
void write_edge_list(const RawCoocNetwork& raw, const WeightedCoocNetwork& weighted,
                     const Vocabulary& vocab, const std::string& path);

}  // namespace cwtm
