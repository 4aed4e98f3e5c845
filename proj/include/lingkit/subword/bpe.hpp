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
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lingkit/core/error.hpp"
#include "lingkit/core/text.hpp"
#include "lingkit/core/unicode.hpp"

namespace lingkit::subword {

inline constexpr std::string_view kEndOfWord = "</w>";
inline constexpr std::string_view kCodesVersion = "0.2";

struct MergePair {
  std::string left;
  std::string right;

  std::string merged() const { return left + right; }

  friend auto operator<=>(const MergePair&, const MergePair&) = default;
  friend bool operator==(const MergePair&, const MergePair&) = default;
};

// Ordered merge operations; a merge's rank is its position in the list.
class BpeModel {
 public:
  BpeModel() = default;

  explicit BpeModel(std::vector<MergePair> merges,
                    std::string version = std::string(kCodesVersion))
      : merges_(std::move(merges)), version_(std::move(version)) {
    ranks_.reserve(merges_.size());
    for (size_t i = 0; i < merges_.size(); ++i) {
      const auto& m = merges_[i];
      if (m.left.empty() || m.right.empty()) {
        throw FormatError("merge " + std::to_string(i) + " has an empty symbol");
      }
      if (!ranks_.emplace(key(m.left, m.right), i).second) {
        throw FormatError("duplicate merge '" + m.left + " " + m.right + "'");
      }
    }
  }

  const std::vector<MergePair>& merges() const { return merges_; }
  const std::string& version() const { return version_; }
  size_t size() const { return merges_.size(); }
  std::string_view eow_marker() const { return kEndOfWord; }

  // Rank of the merge (left, right), or npos when not a learned merge.
  size_t rank(std::string_view left, std::string_view right) const {
    auto it = ranks_.find(key(left, right));
    return it == ranks_.end() ? npos : it->second;
  }

  static constexpr size_t npos = std::numeric_limits<size_t>::max();

  friend bool operator==(const BpeModel& a, const BpeModel& b) {
    return a.merges_ == b.merges_ && a.version_ == b.version_;
  }

 private:
  static std::string key(std::string_view left, std::string_view right) {
    std::string k;
    k.reserve(left.size() + right.size() + 1);
    k.append(left);
    k.push_back(' ');
    k.append(right);
    return k;
  }

  std::vector<MergePair> merges_;
  std::string version_ = std::string(kCodesVersion);
  std::unordered_map<std::string, size_t> ranks_;
};

// Word types and their frequencies over whitespace tokens, in byte order.
inline std::map<std::string, uint64_t> count_words(const std::vector<std::string>& sentences) {
  std::map<std::string, uint64_t> counts;
  for (const auto& s : sentences) {
    for (auto& token : whitespace_tokenize(s)) ++counts[std::move(token)];
  }
  return counts;
}

// Initial segmentation of a word: one symbol per character plus the
// end-of-word marker as its own final symbol.
inline std::vector<std::string> initial_symbols(std::string_view word) {
  auto symbols = unicode::split_chars(word);
  symbols.emplace_back(kEndOfWord);
  return symbols;
}

namespace detail {

// Incremental BPE trainer over interned symbols. Pair counts are kept in a
// hash map and mirrored in an ordered set (frequency descending, then
// (left, right) in byte order) so the next merge is always *begin().
class BpeTrainer {
 public:
  explicit BpeTrainer(const std::map<std::string, uint64_t>& word_counts) {
    words_.reserve(word_counts.size());
    freqs_.reserve(word_counts.size());
    for (const auto& [word, freq] : word_counts) {
      std::vector<uint32_t> ids;
      for (const auto& sym : initial_symbols(word)) ids.push_back(intern(sym));
      words_.push_back(std::move(ids));
      freqs_.push_back(static_cast<int64_t>(freq));
    }
    for (uint32_t w = 0; w < words_.size(); ++w) add_word_pairs(w, +1);
    flush();
  }

  std::vector<MergePair> run(size_t num_merges, int64_t min_frequency) {
    std::vector<MergePair> merges;
    while (merges.size() < num_merges && !queue_.empty()) {
      const uint64_t best = *queue_.begin();
      if (counts_.at(best) < min_frequency) break;
      const uint32_t left = static_cast<uint32_t>(best >> 32);
      const uint32_t right = static_cast<uint32_t>(best & 0xFFFFFFFFu);
      merges.push_back({symbols_[left], symbols_[right]});
      apply_merge(left, right);
    }
    return merges;
  }

 private:
  struct PairOrder {
    const BpeTrainer* self;
    bool operator()(uint64_t a, uint64_t b) const {
      const int64_t ca = self->counts_.at(a);
      const int64_t cb = self->counts_.at(b);
      if (ca != cb) return ca > cb;
      const auto& la = self->symbols_[a >> 32];
      const auto& lb = self->symbols_[b >> 32];
      if (la != lb) return la < lb;
      return self->symbols_[a & 0xFFFFFFFFu] < self->symbols_[b & 0xFFFFFFFFu];
    }
  };

  static uint64_t pair_key(uint32_t l, uint32_t r) {
    return (static_cast<uint64_t>(l) << 32) | r;
  }

  uint32_t intern(const std::string& s) {
    auto [it, inserted] = ids_.emplace(s, static_cast<uint32_t>(symbols_.size()));
    if (inserted) symbols_.push_back(s);
    return it->second;
  }

  void add_word_pairs(uint32_t w, int sign) {
    const auto& syms = words_[w];
    const int64_t delta = sign * freqs_[w];
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      const uint64_t k = pair_key(syms[i], syms[i + 1]);
      pending_[k] += delta;
      if (sign > 0) where_[k].push_back(w);
    }
  }

  // Moves accumulated count deltas into counts_ and the ordered queue.
  void flush() {
    for (const auto& [k, delta] : pending_) {
      if (delta == 0) continue;
      auto it = counts_.find(k);
      if (it != counts_.end() && it->second > 0) queue_.erase(k);
      int64_t& c = counts_[k];
      c += delta;
      if (c > 0) {
        queue_.insert(k);
      } else {
        counts_.erase(k);
        where_.erase(k);
      }
    }
    pending_.clear();
  }

  void apply_merge(uint32_t left, uint32_t right) {
    const uint64_t k = pair_key(left, right);
    const uint32_t merged = intern(symbols_[left] + symbols_[right]);
    std::vector<uint32_t> affected = std::move(where_[k]);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (uint32_t w : affected) {
      auto& syms = words_[w];
      bool present = false;
      for (size_t i = 0; i + 1 < syms.size(); ++i) {
        if (syms[i] == left && syms[i + 1] == right) {
          present = true;
          break;
        }
      }
      if (!present) continue;
      add_word_pairs(w, -1);
      std::vector<uint32_t> out;
      out.reserve(syms.size());
      for (size_t i = 0; i < syms.size();) {
        if (i + 1 < syms.size() && syms[i] == left && syms[i + 1] == right) {
          out.push_back(merged);
          i += 2;
        } else {
          out.push_back(syms[i]);
          ++i;
        }
      }
      syms = std::move(out);
      add_word_pairs(w, +1);
    }
    flush();
  }

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, uint32_t> ids_;
  std::vector<std::vector<uint32_t>> words_;
  std::vector<int64_t> freqs_;
  std::unordered_map<uint64_t, int64_t> counts_;
  std::unordered_map<uint64_t, int64_t> pending_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> where_;
  std::set<uint64_t, PairOrder> queue_{PairOrder{this}};
};

}  // namespace detail

inline constexpr int64_t kDefaultMinPairFrequency = 2;

// Learns up to `num_merges` merges from a word-frequency table. Each step
// merges the most frequent adjacent pair (ties: smallest (left, right) in
// byte order) and stops early once the best pair occurs fewer than
// `min_frequency` times.
inline BpeModel learn_bpe_from_counts(const std::map<std::string, uint64_t>& word_counts,
                                      size_t num_merges,
                                      int64_t min_frequency = kDefaultMinPairFrequency) {
  if (num_merges == 0) throw InvalidArgument("num_merges must be >= 1");
  if (word_counts.empty()) throw EmptyInput("no words to learn BPE from");
  detail::BpeTrainer trainer(word_counts);
  return BpeModel(trainer.run(num_merges, min_frequency));
}

inline BpeModel learn_bpe(const std::vector<std::string>& sentences, size_t num_merges,
                          int64_t min_frequency = kDefaultMinPairFrequency) {
  if (num_merges == 0) throw InvalidArgument("num_merges must be >= 1");
  if (sentences.empty()) throw EmptyInput("no sentences to learn BPE from");
  const auto counts = count_words(sentences);
  if (counts.empty()) throw EmptyInput("sentences contain no tokens");
  return learn_bpe_from_counts(counts, num_merges, min_frequency);
}

// Segments one token: characters plus the end-of-word marker, then the
// lowest-ranked applicable merge is applied to all of its (left-to-right,
// non-overlapping) occurrences until no learned merge applies.
inline std::vector<std::string> apply_bpe(const BpeModel& model, std::string_view token) {
  if (token.empty()) return {};
  auto symbols = initial_symbols(token);
  while (symbols.size() > 1) {
    size_t best_rank = BpeModel::npos;
    size_t best_pos = 0;
    for (size_t i = 0; i + 1 < symbols.size(); ++i) {
      const size_t r = model.rank(symbols[i], symbols[i + 1]);
      if (r < best_rank) {
        best_rank = r;
        best_pos = i;
      }
    }
    if (best_rank == BpeModel::npos) break;
    const std::string left = symbols[best_pos];
    const std::string right = symbols[best_pos + 1];
    std::vector<std::string> out;
    out.reserve(symbols.size());
    for (size_t i = 0; i < symbols.size();) {
      if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
        out.push_back(left + right);
        i += 2;
      } else {
        out.push_back(std::move(symbols[i]));
        ++i;
      }
    }
    symbols = std::move(out);
  }
  return symbols;
}

// Applies BPE to every whitespace token of a sentence, concatenating pieces.
inline std::vector<std::string> apply_bpe_sentence(const BpeModel& model,
                                                   std::string_view sentence) {
  std::vector<std::string> pieces;
  for (const auto& token : whitespace_tokenize(sentence)) {
    auto sub = apply_bpe(model, token);
    pieces.insert(pieces.end(), std::make_move_iterator(sub.begin()),
                  std::make_move_iterator(sub.end()));
  }
  return pieces;
}

// Concatenates pieces; every end-of-word marker becomes a token boundary.
inline std::string bpe_decode(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& piece : pieces) {
    const std::string_view p = piece;
    if (p.size() >= kEndOfWord.size() && p.substr(p.size() - kEndOfWord.size()) == kEndOfWord) {
      out.append(p.substr(0, p.size() - kEndOfWord.size()));
      out.push_back(' ');
    } else {
      out.append(p);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Codes file: `#version: 0.2` then one `left right` merge per line.
inline void write_codes(std::ostream& out, const BpeModel& model) {
  out << "#version: " << model.version() << '\n';
  for (const auto& m : model.merges()) out << m.left << ' ' << m.right << '\n';
}

inline std::string serialize_codes(const BpeModel& model) {
  std::ostringstream os;
  write_codes(os, model);
  return os.str();
}

inline BpeModel read_codes(std::istream& in) {
  std::vector<MergePair> merges;
  std::string version(kCodesVersion);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("#version:", 0) == 0) {
      std::string_view v = std::string_view(line).substr(9);
      while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
      version = std::string(v);
      continue;
    }
    const size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 == line.size() ||
        line.find(' ', sp + 1) != std::string::npos) {
      throw FormatError("codes line " + std::to_string(line_no) +
                        ": expected 'left right'");
    }
    merges.push_back({line.substr(0, sp), line.substr(sp + 1)});
  }
  return BpeModel(std::move(merges), std::move(version));
}

inline BpeModel parse_codes(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_codes(in);
}

inline BpeModel load_codes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open codes file: " + path);
  return read_codes(in);
}

inline void save_codes(const std::string& path, const BpeModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write codes file: " + path);
  write_codes(out, model);
}

}  // namespace lingkit::subword
