// Copyright 2026 The lingkit Authors
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

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lingkit/core/error.hpp"
#include "lingkit/core/language_tag.hpp"
#include "lingkit/core/parallel.hpp"
#include "lingkit/core/text.hpp"

namespace lingkit {

struct Sentence {
  std::string text;
  LanguageTag lang;
  DomainTag domain = DomainTag::kOther;
  std::string source_id;
};

struct LabeledSentence {
  LanguageTag lang;
  std::string text;

  friend bool operator==(const LabeledSentence&, const LabeledSentence&) = default;
};

class CorpusBuilder;

// Sentences grouped by language; languages iterate in lexicographic tag
// order and sentences keep ingestion order. Immutable once built.
class Corpus {
 public:
  using Store = std::map<LanguageTag, std::vector<Sentence>>;

  Corpus() = default;

  static Corpus from_labeled(const std::vector<LabeledSentence>& items);

  bool contains(const LanguageTag& lang) const { return by_lang_.count(lang) > 0; }

  const std::vector<Sentence>& sentences(const LanguageTag& lang) const {
    auto it = by_lang_.find(lang);
    if (it == by_lang_.end()) {
      throw UnknownLanguage("language not in corpus: " + lang.str());
    }
    return it->second;
  }

  size_t count(const LanguageTag& lang) const {
    auto it = by_lang_.find(lang);
    return it == by_lang_.end() ? 0 : it->second.size();
  }

  size_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  std::vector<LanguageTag> languages() const {
    std::vector<LanguageTag> out;
    out.reserve(by_lang_.size());
    for (const auto& [lang, _] : by_lang_) out.push_back(lang);
    return out;
  }

  // Flattened (lang, text) view in language order.
  std::vector<LabeledSentence> labeled() const {
    std::vector<LabeledSentence> out;
    out.reserve(total_);
    for (const auto& [lang, items] : by_lang_) {
      for (const auto& s : items) out.push_back({lang, s.text});
    }
    return out;
  }

  Store::const_iterator begin() const { return by_lang_.begin(); }
  Store::const_iterator end() const { return by_lang_.end(); }

 private:
  friend class CorpusBuilder;

  Store by_lang_;
  size_t total_ = 0;
};

// Accumulates sentences, dropping empty text and exact (lang, text)
// duplicates after the first occurrence.
class CorpusBuilder {
 public:
  // Text must already be cleaned. Returns false when dropped.
  bool add(Sentence sentence) {
    if (sentence.text.empty()) return false;
    auto& seen = seen_[sentence.lang];
    if (!seen.insert(sentence.text).second) return false;
    auto& bucket = corpus_.by_lang_[sentence.lang];
    bucket.push_back(std::move(sentence));
    ++corpus_.total_;
    return true;
  }

  Corpus build() && {
    seen_.clear();
    return std::move(corpus_);
  }

 private:
  Corpus corpus_;
  std::map<LanguageTag, std::unordered_set<std::string>> seen_;
};

inline Corpus Corpus::from_labeled(const std::vector<LabeledSentence>& items) {
  CorpusBuilder builder;
  size_t i = 0;
  for (const auto& item : items) {
    builder.add({clean_text(item.text), item.lang, DomainTag::kOther,
                 "#" + std::to_string(i++)});
  }
  return std::move(builder).build();
}

struct ManifestEntry {
  std::filesystem::path path;
  LanguageTag lang;
  DomainTag domain;
  ScriptTag script;
  size_t line = 0;
};

using WarningSink = std::function<void(const std::string&)>;

inline void warn_to_stderr(const std::string& message) {
  std::cerr << "warning: " << message << '\n';
}

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

// Manifest records are `path<TAB>lang<TAB>domain<TAB>script`; blank lines and
// lines starting with '#' are skipped. Relative paths resolve against
// `base_dir`.
inline std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                                 const std::filesystem::path& base_dir,
                                                 const WarningSink& warn = warn_to_stderr) {
  std::vector<ManifestEntry> entries;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = detail::strip_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split_tabs(line);
    const std::string where = "manifest line " + std::to_string(line_no);
    if (fields.size() != 4) {
      throw ManifestParse(where + ": expected 4 tab-separated fields, got " +
                          std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ManifestParse(where + ": empty path");
    const LanguageTag lang = LanguageTag::parse(fields[1]);
    auto domain = parse_domain(fields[2]);
    if (!domain) {
      if (warn) {
        warn(where + ": unknown domain '" + std::string(fields[2]) +
             "', using 'other'");
      }
      domain = DomainTag::kOther;
    }
    const auto script = parse_script(fields[3]);
    if (!script) {
      throw ManifestParse(where + ": unknown script '" + std::string(fields[3]) + "'");
    }
    std::filesystem::path path{std::string(fields[0])};
    if (path.is_relative()) path = base_dir / path;
    entries.push_back({path, lang, *domain, *script, line_no});
  }
  return entries;
}

namespace detail {

struct RawLine {
  std::string text;
  size_t line;
};

inline std::vector<RawLine> read_cleaned_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open corpus file: " + path.string());
  std::vector<RawLine> lines;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string cleaned = clean_text(raw);
    if (!cleaned.empty()) lines.push_back({std::move(cleaned), line_no});
  }
  return lines;
}

}  // namespace detail

// Reads every file listed in the manifest. Files are read and cleaned in
// parallel, then merged in manifest order, so the result does not depend on
// `threads`.
inline Corpus load_corpus(const std::filesystem::path& manifest_path, unsigned threads = 1,
                          const WarningSink& warn = warn_to_stderr) {
  std::ifstream in(manifest_path);
  if (!in) throw MissingFile("cannot open manifest: " + manifest_path.string());
  const auto entries = parse_manifest(in, manifest_path.parent_path(), warn);

  for (const auto& e : entries) {
    if (!std::filesystem::is_regular_file(e.path)) {
      throw MissingFile("manifest line " + std::to_string(e.line) +
                        ": no such file: " + e.path.string());
    }
  }

  std::vector<std::vector<detail::RawLine>> per_file(entries.size());
  parallel_for(entries.size(), threads,
               [&](size_t i) { per_file[i] = detail::read_cleaned_lines(entries[i].path); });

  CorpusBuilder builder;
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string source = e.path.string();
    for (auto& line : per_file[i]) {
      builder.add({std::move(line.text), e.lang, e.domain,
                   source + ":" + std::to_string(line.line)});
    }
  }
  return std::move(builder).build();
}

// Labeled-sentence files hold `lang<TAB>text` per line. Text is cleaned on
// read; lines that clean to nothing are skipped.
inline std::vector<LabeledSentence> read_labeled(std::istream& in,
                                                 const std::string& origin = "<stream>") {
  std::vector<LabeledSentence> out;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = detail::strip_cr(raw);
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError(origin + ":" + std::to_string(line_no) +
                        ": expected 'lang<TAB>text'");
    }
    std::string text = clean_text(line.substr(tab + 1));
    if (text.empty()) continue;
    out.push_back({LanguageTag::parse(line.substr(0, tab)), std::move(text)});
  }
  return out;
}

inline std::vector<LabeledSentence> read_labeled_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open labeled file: " + path.string());
  return read_labeled(in, path.string());
}

inline void write_labeled(std::ostream& out, const std::vector<LabeledSentence>& items) {
  for (const auto& item : items) out << item.lang << '\t' << item.text << '\n';
}

inline void write_labeled_file(const std::filesystem::path& path,
                               const std::vector<LabeledSentence>& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  write_labeled(out, items);
}

}  // namespace lingkit
