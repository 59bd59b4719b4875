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

#include "cwtm/synthetic.hpp"

#include <stdexcept>
#include <string>

#include "cwtm/rng.hpp"

namespace cwtm {

void SyntheticSpec::validate() const {
  if (abundant_topics < 1 || scarce_topics < 1) {
    throw std::invalid_argument("topic counts must be >= 1");
  }
  if (docs_per_abundant < 1 || docs_per_scarce < 1) {
    throw std::invalid_argument("document counts must be >= 1");
  }
  if (vocab_per_topic < 1 || doc_len < 1) {
    throw std::invalid_argument("vocab_per_topic and doc_len must be >= 1");
  }
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    throw std::invalid_argument("overlap_fraction must be in [0, 1)");
  }
}

RawCorpus make_synthetic_unbalanced(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const int topics = spec.abundant_topics + spec.scarce_topics;
  const auto block_word = [&](int topic, int j) {
    return "t" + std::to_string(topic) + "w" + std::to_string(j);
  };
  const auto pool_word = [&](int j) { return "pool" + std::to_string(j); };

  RawCorpus raw;
  const auto emit_docs = [&](int topic, int count, const std::string& label) {
    for (int d = 0; d < count; ++d) {
      std::vector<std::string> doc;
      doc.reserve(spec.doc_len);
      for (int n = 0; n < spec.doc_len; ++n) {
        if (rng.next_double() < spec.overlap_fraction) {
          doc.push_back(pool_word(rng.next_below(spec.vocab_per_topic)));
        } else {
          doc.push_back(block_word(topic, rng.next_below(spec.vocab_per_topic)));
        }
      }
      raw.docs.push_back(std::move(doc));
      raw.labels.push_back(label);
    }
  };

  for (int t = 0; t < spec.abundant_topics; ++t) {
    emit_docs(t, spec.docs_per_abundant, "abundant" + std::to_string(t));
  }
  for (int t = 0; t < spec.scarce_topics; ++t) {
    emit_docs(spec.abundant_topics + t, spec.docs_per_scarce,
              "scarce" + std::to_string(t));
  }
  return raw;
}

}  // namespace cwtm
