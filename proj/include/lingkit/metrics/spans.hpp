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

#include <algorithm>
#include <compare>
#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lingkit/core/error.hpp"
#include "lingkit/metrics/classification.hpp"

namespace lingkit::metrics {

struct BioSequence {
  std::vector<std::string> tokens;
  std::vector<std::string> tags;
};

// Half-open token range [start, end) carrying a type label.
struct Span {
  size_t start = 0;
  size_t end = 0;
  std::string label;

  friend auto operator<=>(const Span&, const Span&) = default;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class BioMode {
  kLenient,  // I-X after O or after another type opens a new X span
  kStrict,   // the same situation raises MalformedTag
};

struct BioTag {
  char kind = 'O';  // 'O', 'B' or 'I'
  std::string_view type;
};

inline BioTag parse_bio_tag(std::string_view tag) {
  if (tag == "O") return {'O', {}};
  if (tag.size() > 2 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
    return {tag[0], tag.substr(2)};
  }
  throw MalformedTag("not a BIO tag: '" + std::string(tag) + "'");
}

inline std::vector<Span> extract_spans(const std::vector<std::string>& tags,
                                       BioMode mode = BioMode::kLenient) {
  std::vector<Span> spans;
  bool open = false;
  for (size_t i = 0; i < tags.size(); ++i) {
    const BioTag t = parse_bio_tag(tags[i]);
    const bool continues = t.kind == 'I' && open && spans.back().label == t.type;
    if (open && !continues) {
      spans.back().end = i;
      open = false;
    }
    if (t.kind == 'O') continue;
    if (continues) continue;
    if (t.kind == 'I' && mode == BioMode::kStrict) {
      throw MalformedTag("I-" + std::string(t.type) + " at position " + std::to_string(i) +
                         " does not continue a span");
    }
    spans.push_back({i, i + 1, std::string(t.type)});
    open = true;
  }
  if (open) spans.back().end = tags.size();
  return spans;
}

inline std::vector<Span> extract_spans(const BioSequence& seq,
                                       BioMode mode = BioMode::kLenient) {
  if (seq.tokens.size() != seq.tags.size()) {
    throw LengthMismatch(std::to_string(seq.tokens.size()) + " tokens but " +
                         std::to_string(seq.tags.size()) + " tags");
  }
  return extract_spans(seq.tags, mode);
}

// Inverse of extract_spans for sorted, non-overlapping spans.
inline std::vector<std::string> render_bio(const std::vector<Span>& spans, size_t length) {
  std::vector<std::string> tags(length, "O");
  for (const auto& s : spans) {
    if (s.start >= s.end || s.end > length) {
      throw InvalidArgument("span [" + std::to_string(s.start) + ", " +
                            std::to_string(s.end) + ") out of range");
    }
    tags[s.start] = "B-" + s.label;
    for (size_t i = s.start + 1; i < s.end; ++i) tags[i] = "I-" + s.label;
  }
  return tags;
}

struct SpanCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;

  SpanCounts& operator+=(const SpanCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

// Exact (start, end, label) matching; each gold span matches at most once.
inline SpanCounts count_span_matches(std::vector<Span> gold, std::vector<Span> pred) {
  std::sort(gold.begin(), gold.end());
  std::sort(pred.begin(), pred.end());
  uint64_t tp = 0;
  auto g = gold.begin();
  auto p = pred.begin();
  while (g != gold.end() && p != pred.end()) {
    if (*g < *p) {
      ++g;
    } else if (*p < *g) {
      ++p;
    } else {
      ++tp, ++g, ++p;
    }
  }
  return {tp, pred.size() - tp, gold.size() - tp};
}

inline PrfScore span_prf(const std::vector<Span>& gold, const std::vector<Span>& pred) {
  const auto c = count_span_matches(gold, pred);
  return make_prf(c.tp, c.fp, c.fn);
}

struct SpanReport {
  PrfScore overall;                     // micro over all spans
  std::map<std::string, PrfScore> by_type;
  size_t sequences = 0;
};

// Dataset-level span scores; sequences are paired by position.
inline SpanReport span_report(const std::vector<BioSequence>& gold,
                              const std::vector<BioSequence>& pred,
                              BioMode mode = BioMode::kLenient) {
  if (gold.size() != pred.size()) {
    throw LengthMismatch("gold has " + std::to_string(gold.size()) +
                         " sequences, pred has " + std::to_string(pred.size()));
  }
  SpanCounts total;
  std::map<std::string, SpanCounts> per_type;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].tags.size() != pred[i].tags.size()) {
      throw LengthMismatch("sequence " + std::to_string(i) + ": gold length " +
                           std::to_string(gold[i].tags.size()) + ", pred length " +
                           std::to_string(pred[i].tags.size()));
    }
    const auto g = extract_spans(gold[i], mode);
    const auto p = extract_spans(pred[i], mode);
    total += count_span_matches(g, p);
    std::map<std::string, std::pair<std::vector<Span>, std::vector<Span>>> split;
    for (const auto& s : g) split[s.label].first.push_back(s);
    for (const auto& s : p) split[s.label].second.push_back(s);
    for (auto& [label, gp] : split) {
      per_type[label] += count_span_matches(std::move(gp.first), std::move(gp.second));
    }
  }
  SpanReport report;
  report.overall = make_prf(total.tp, total.fp, total.fn);
  for (const auto& [label, c] : per_type) report.by_type[label] = make_prf(c.tp, c.fp, c.fn);
  report.sequences = gold.size();
  return report;
}

// CoNLL-style input: `token<TAB>tag` per line, blank line between sequences.
inline std::vector<BioSequence> read_conll(std::istream& in,
                                           const std::string& origin = "<stream>") {
  std::vector<BioSequence> out;
  BioSequence current;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.tokens.empty()) out.push_back(std::move(current));
      current = {};
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(origin + ":" + std::to_string(line_no) + ": expected 'token<TAB>tag'");
    }
    current.tokens.push_back(line.substr(0, tab));
    current.tags.push_back(line.substr(tab + 1));
    parse_bio_tag(current.tags.back());
  }
  if (!current.tokens.empty()) out.push_back(std::move(current));
  return out;
}

inline std::vector<BioSequence> read_conll_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open CoNLL file: " + path);
  return read_conll(in, path);
}

}  // namespace lingkit::metrics
