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

#include "cwtm/pseudo_docs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace cwtm {

namespace {

void sort_neighbors(PseudoCorpus& pc) {
  for (auto& doc : pc.docs) {
    std::sort(doc.begin(), doc.end(),
              [](const PseudoCorpus::Neighbor& a, const PseudoCorpus::Neighbor& b) {
                return a.word < b.word;
              });
  }
}

}  // namespace

std::int64_t PseudoCorpus::total_tokens() const {
  std::int64_t n = 0;
  for (const auto& doc : docs) {
    for (const auto& nb : doc) n += nb.multiplicity;
  }
  return n;
}

std::vector<std::vector<WordId>> PseudoCorpus::expand() const {
  std::vector<std::vector<WordId>> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::int64_t len = 0;
    for (const auto& nb : docs[i]) len += nb.multiplicity;
    out[i].reserve(static_cast<std::size_t>(len));
    for (const auto& nb : docs[i]) {
      out[i].insert(out[i].end(), static_cast<std::size_t>(nb.multiplicity), nb.word);
    }
  }
  return out;
}

PseudoCorpus from_weighted_network(const WeightedCoocNetwork& net, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("pseudo-document scale must be > 0");
  PseudoCorpus pc;
  pc.docs.resize(net.vocab_size);
  for (const auto& [key, degree] : net.degree) {
    const std::int64_t m = std::max<std::int64_t>(std::llround(scale * degree), 1);
    pc.docs[pair_lo(key)].push_back({pair_hi(key), m});
    pc.docs[pair_hi(key)].push_back({pair_lo(key), m});
  }
  sort_neighbors(pc);
  return pc;
}

PseudoCorpus from_raw_network(const RawCoocNetwork& net) {
  PseudoCorpus pc;
  pc.docs.resize(net.vocab_size);
  for (const auto& [key, c] : net.pair_count) {
    pc.docs[pair_lo(key)].push_back({pair_hi(key), c});
    pc.docs[pair_hi(key)].push_back({pair_lo(key), c});
  }
  sort_neighbors(pc);
  return pc;
}

void write_pseudo_corpus(const PseudoCorpus& pc, const Vocabulary& vocab,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& doc : pc.docs) {
    bool first = true;
    for (const auto& nb : doc) {
      for (std::int64_t k = 0; k < nb.multiplicity; ++k) {
        if (!first) out << ' ';
        out << vocab.words.at(nb.word);
        first = false;
      }
    }
    out << '\n';
  }
}

}  // namespace cwtm
