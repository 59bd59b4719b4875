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
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cwtm {

using WordId = std::uint32_t;

/// String-token documents straight off disk, before any filtering.
/// Empty lines stay as empty documents so indices keep lining up with
/// label files.
struct RawCorpus {
  std::vector<std::vector<std::string>> docs;
  std::vector<std::string> labels;  // empty when unlabeled, else one per doc

  bool labeled() const { return !labels.empty(); }
  std::size_t size() const { return docs.size(); }
};

/// word <-> dense id bijection plus per-word corpus frequency.
/// Ids are dense 0..V-1, assigned in order of first appearance.
struct Vocabulary {
  std::unordered_map<std::string, WordId> ids;
  std::vector<std::string> words;       // id -> word
  std::vector<std::int64_t> frequency;  // id -> occurrences in the corpus

  std::size_t size() const { return words.size(); }
  bool contains(const std::string& w) const { return ids.count(w) != 0; }
};

struct Document {
  std::vector<WordId> tokens;  // order preserved
  std::string label;
  std::uint32_t doc_id = 0;

  bool empty() const { return tokens.empty(); }
  std::size_t length() const { return tokens.size(); }
};

struct Corpus {
  std::vector<Document> documents;
  Vocabulary vocabulary;
  std::vector<std::string> label_set;  // distinct labels, sorted

  bool labeled() const { return !label_set.empty(); }
  std::size_t num_documents() const { return documents.size(); }
  std::int64_t total_tokens() const;
};

// One document per line, UTF-8, whitespace-delimited tokens. The label
// file, when given, must have exactly one label per corpus line; a count
// mismatch or undecodable bytes are hard errors (with the line number).
RawCorpus load_corpus(const std::string& text_path,
                      const std::string& label_path = {});

// One word per line; blank lines ignored.
std::unordered_set<std::string> load_stopwords(const std::string& path);

// Inverse of load_corpus: writes the corpus text format (plus a label file
// when label_path is non-empty).
void write_corpus(const RawCorpus& raw, const std::string& text_path,
                  const std::string& label_path = {});

// Lowercases tokens, drops stopwords and words occurring fewer than
// min_count times, then assigns dense ids by first appearance. Documents
// that end up empty are retained (flagged via Document::empty). Applying
// this to its own output with the same arguments is the identity.
Corpus build_vocabulary(const RawCorpus& raw, std::int64_t min_count = 1,
                        const std::unordered_set<std::string>& stopwords = {});

// Maps filtered documents back to string tokens.
RawCorpus to_raw(const Corpus& corpus);

struct UnbalancedSplit {
  Corpus scarce;    // labels with <= threshold documents, all their docs
  Corpus abundant;  // everything else
};

// Partitions a fully labeled corpus by per-label document count. Both
// halves keep the full original vocabulary so a model trained on the whole
// corpus can be evaluated per subset; doc_ids are preserved.
UnbalancedSplit split_unbalanced(const Corpus& corpus,
                                 std::int64_t scarce_threshold);

}  // namespace cwtm
