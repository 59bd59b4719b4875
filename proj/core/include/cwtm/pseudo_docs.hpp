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
#include <vector>

#include "cwtm/cooc_network.hpp"

namespace cwtm {

/// One pseudo-document per vocabulary word: the word's surviving network
/// neighbours with integer multiplicities. Words whose edges were all
/// pruned keep an empty pseudo-document and are excluded from training.
struct PseudoCorpus {
  struct Neighbor {
    WordId word;
    std::int64_t multiplicity;  // >= 1
  };
  // Indexed by word id; neighbours sorted by id so expansion is canonical.
  std::vector<std::vector<Neighbor>> docs;

  std::size_t size() const { return docs.size(); }
  bool trained(WordId w) const { return !docs[w].empty(); }
  std::int64_t total_tokens() const;

  // Multiplicity-expanded token sequences for the Gibbs sampler.
  std::vector<std::vector<WordId>> expand() const;
};

// CWUTM route: each surviving edge (i, j) with activity degree g puts j in
// pseudo-document i (and symmetrically) with multiplicity
// max(round(scale * g), 1); round is half-away-from-zero.
PseudoCorpus from_weighted_network(const WeightedCoocNetwork& net, double scale);

// WNTM route: multiplicity is the raw co-occurrence count.
PseudoCorpus from_raw_network(const RawCoocNetwork& net);

// One pseudo-document per line, corpus text format (line i = word i), so
// the Gibbs core can be driven on the dump like on any corpus.
void write_pseudo_corpus(const PseudoCorpus& pc, const Vocabulary& vocab,
                         const std::string& path);

}  // namespace cwtm
