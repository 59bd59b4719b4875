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

#include "cwtm/corpus.hpp"

namespace cwtm {

/// Parameters for the unbalanced synthetic corpus: a few abundant topics
/// with many documents, a few scarce topics with few, each topic drawing
/// from a mostly private vocabulary block plus a shared pool.
struct SyntheticSpec {
  int abundant_topics = 2;
  int scarce_topics = 2;
  int docs_per_abundant = 500;
  int docs_per_scarce = 25;
  int vocab_per_topic = 40;
  int doc_len = 8;
  double overlap_fraction = 0.1;  // chance a token comes from the shared pool
  std::uint64_t seed = 42;

  void validate() const;
};

// Deterministic for a fixed spec. Labels are "abundant<i>" / "scarce<i>";
// with overlap_fraction = 0 every document stays inside one topic block.
RawCorpus make_synthetic_unbalanced(const SyntheticSpec& spec);

}  // namespace cwtm
