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

#include "cwtm/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cwtm {

namespace {

// Minimal UTF-8 well-formedness check (RFC 3629: no overlongs, no
// surrogates, nothing past U+10FFFF).
bool valid_utf8(const std::string& s) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  std::size_t i = 0, n = s.size();
  while (i < n) {
    unsigned char c = p[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    int extra;
    std::uint32_t cp;
    if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    for (int k = 1; k <= extra; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    if (extra == 1 && cp < 0x80) return false;
    if (extra == 2 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) return false;
    if (extra == 3 && (cp < 0x10000 || cp > 0x10FFFF)) return false;
    i += extra + 1;
  }
  return true;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0, n = line.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string lowercase(std::string w) {
  for (auto& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::int64_t Corpus::total_tokens() const {
  std::int64_t n = 0;
  for (const auto& d : documents) n += static_cast<std::int64_t>(d.tokens.size());
  return n;
}

RawCorpus load_corpus(const std::string& text_path, const std::string& label_path) {
  RawCorpus raw;
  auto lines = read_lines(text_path);
  raw.docs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!valid_utf8(lines[i])) {
      throw std::runtime_error(text_path + ": undecodable bytes at line " +
                               std::to_string(i + 1));
    }
    raw.docs.push_back(split_whitespace(lines[i]));
  }
  if (!label_path.empty()) {
    auto label_lines = read_lines(label_path);
    if (label_lines.size() != raw.docs.size()) {
      throw std::runtime_error("line-count mismatch: " + text_path + " has " +
                               std::to_string(raw.docs.size()) + " lines, " +
                               label_path + " has " +
                               std::to_string(label_lines.size()));
    }
    raw.labels.reserve(label_lines.size());
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
      if (!valid_utf8(label_lines[i])) {
        throw std::runtime_error(label_path + ": undecodable bytes at line " +
                                 std::to_string(i + 1));
      }
      auto label = trim(label_lines[i]);
      if (label.empty()) {
        throw std::runtime_error(label_path + ": empty label at line " +
                                 std::to_string(i + 1));
      }
      raw.labels.push_back(std::move(label));
    }
  }
  return raw;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::unordered_set<std::string> words;
  for (const auto& line : read_lines(path)) {
    auto w = trim(line);
    if (!w.empty()) words.insert(lowercase(w));
  }
  return words;
}

void write_corpus(const RawCorpus& raw, const std::string& text_path,
                  const std::string& label_path) {
  std::ofstream out(text_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + text_path);
  for (const auto& doc : raw.docs) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (i) out << ' ';
      out << doc[i];
    }
    out << '\n';
  }
  if (!label_path.empty()) {
    if (raw.labels.size() != raw.docs.size()) {
      throw std::runtime_error("corpus has no aligned labels to write");
    }
    std::ofstream lout(label_path, std::ios::binary);
    if (!lout) throw std::runtime_error("cannot write file: " + label_path);
    for (const auto& l : raw.labels) lout << l << '\n';
  }
}

Corpus build_vocabulary(const RawCorpus& raw, std::int64_t min_count,
                        const std::unordered_set<std::string>& stopwords) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");

  std::unordered_map<std::string, std::int64_t> freq;
  for (const auto& doc : raw.docs) {
    for (const auto& tok : doc) ++freq[lowercase(tok)];
  }

  Corpus corpus;
  corpus.documents.reserve(raw.docs.size());
  std::int64_t kept_tokens = 0;
  for (std::size_t d = 0; d < raw.docs.size(); ++d) {
    Document doc;
    doc.doc_id = static_cast<std::uint32_t>(d);
    if (raw.labeled()) doc.label = raw.labels[d];
    for (const auto& tok : raw.docs[d]) {
      auto w = lowercase(tok);
      if (stopwords.count(w) || freq[w] < min_count) continue;
      auto [it, inserted] =
          corpus.vocabulary.ids.try_emplace(w, static_cast<WordId>(corpus.vocabulary.words.size()));
      if (inserted) {
        corpus.vocabulary.words.push_back(w);
        corpus.vocabulary.frequency.push_back(freq[w]);
      }
      doc.tokens.push_back(it->second);
      ++kept_tokens;
    }
    corpus.documents.push_back(std::move(doc));
  }

  if (raw.labeled()) {
    std::vector<std::string> labels(raw.labels);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    corpus.label_set = std::move(labels);
  }

  if (kept_tokens == 0 && !raw.docs.empty()) {
    std::cerr << "warning: vocabulary filtering left every document empty\n";
  }
  return corpus;
}

RawCorpus to_raw(const Corpus& corpus) {
  RawCorpus raw;
  raw.docs.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    std::vector<std::string> words;
    words.reserve(doc.tokens.size());
    for (WordId w : doc.tokens) words.push_back(corpus.vocabulary.words.at(w));
    raw.docs.push_back(std::move(words));
    if (corpus.labeled()) raw.labels.push_back(doc.label);
  }
  return raw;
}

UnbalancedSplit split_unbalanced(const Corpus& corpus, std::int64_t scarce_threshold) {
  if (!corpus.labeled()) {
    throw std::runtime_error("split_unbalanced requires a fully labeled corpus");
  }
  if (scarce_threshold < 0) {
    throw std::invalid_argument("scarce_threshold must be >= 0");
  }

  std::map<std::string, std::int64_t> label_count;
  for (const auto& doc : corpus.documents) ++label_count[doc.label];

  UnbalancedSplit split;
  split.scarce.vocabulary = corpus.vocabulary;
  split.abundant.vocabulary = corpus.vocabulary;
  std::unordered_set<std::string> scarce_labels, abundant_labels;
  for (const auto& doc : corpus.documents) {
    if (label_count.at(doc.label) <= scarce_threshold) {
      split.scarce.documents.push_back(doc);
      scarce_labels.insert(doc.label);
    } else {
      split.abundant.documents.push_back(doc);
      abundant_labels.insert(doc.label);
    }
  }
  auto sorted_labels = [](const std::unordered_set<std::string>& s) {
    std::vector<std::string> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  split.scarce.label_set = sorted_labels(scarce_labels);
  split.abundant.label_set = sorted_labels(abundant_labels);
  return split;
}

}  // namespace cwtm
