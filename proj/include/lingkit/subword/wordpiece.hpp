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
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lingkit/subword/bpe.hpp"

namespace lingkit::subword {

inline constexpr std::string_view kContinuationPrefix = "##";
inline constexpr std::string_view kUnkPiece = "[UNK]";

// Vocabulary sizes of the two published WordPiece configurations.
inline constexpr size_t kVocabPreset110k = 110000;
inline constexpr size_t kVocabPreset250k = 250000;

// WordPiece vocabulary; piece ids are positions in pieces().
class WordPieceVocab {
 public:
  WordPieceVocab(std::vector<std::string> pieces, size_t size_cap)
      : pieces_(std::move(pieces)), size_cap_(size_cap) {
    if (pieces_.size() > size_cap_) {
      throw CapTooSmall("vocabulary has " + std::to_string(pieces_.size()) +
                        " pieces, cap is " + std::to_string(size_cap_));
    }
    index_.reserve(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].empty()) throw FormatError("empty vocabulary piece at id " + std::to_string(i));
      if (!index_.emplace(pieces_[i], i).second) {
        throw FormatError("duplicate vocabulary piece '" + pieces_[i] + "'");
      }
    }
    if (!contains(kUnkPiece)) throw FormatError("vocabulary lacks the [UNK] piece");
  }

  const std::vector<std::string>& pieces() const { return pieces_; }
  size_t size() const { return pieces_.size(); }
  size_t size_cap() const { return size_cap_; }
  std::string_view unk_piece() const { return kUnkPiece; }
  std::string_view continuation_prefix() const { return kContinuationPrefix; }

  bool contains(std::string_view piece) const {
    return index_.find(std::string(piece)) != index_.end();
  }

  // Piece id, or the [UNK] id for unknown pieces.
  size_t id(std::string_view piece) const {
    auto it = index_.find(std::string(piece));
    return it != index_.end() ? it->second : index_.at(std::string(kUnkPiece));
  }

 private:
  std::vector<std::string> pieces_;
  size_t size_cap_;
  std::unordered_map<std::string, size_t> index_;
};

// BPE pieces of one word in WordPiece convention: end-of-word marker
// dropped, non-initial pieces prefixed with "##".
inline std::vector<std::string> to_wordpiece_convention(std::vector<std::string> pieces) {
  std::vector<std::string> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (std::string_view(p).ends_with(kEndOfWord)) p.resize(p.size() - kEndOfWord.size());
    if (p.empty()) continue;
    if (out.empty()) {
      out.push_back(std::move(p));
    } else {
      out.push_back(std::string(kContinuationPrefix) + p);
    }
  }
  return out;
}

// Vocabulary = [UNK], every character seen in training (word-initial form),
// then BPE-derived pieces by descending frequency (ties in byte order)
// until size_cap is reached. Ids follow that order; characters are sorted.
inline WordPieceVocab build_wordpiece_vocab(const BpeModel& model,
                                            const std::vector<std::string>& training_sentences,
                                            size_t size_cap) {
  const auto word_counts = count_words(training_sentences);
  std::set<std::string> chars;
  std::map<std::string, uint64_t> piece_counts;
  for (const auto& [word, freq] : word_counts) {
    for (auto& c : unicode::split_chars(word)) chars.insert(std::move(c));
    for (auto& p : to_wordpiece_convention(apply_bpe(model, word))) {
      piece_counts[std::move(p)] += freq;
    }
  }
  if (size_cap < chars.size() + 2) {
    throw CapTooSmall("size cap " + std::to_string(size_cap) + " below character inventory " +
                      std::to_string(chars.size()) + " + 2");
  }

  std::vector<std::string> pieces;
  pieces.reserve(std::min(size_cap, 1 + chars.size() + piece_counts.size()));
  pieces.emplace_back(kUnkPiece);
  pieces.insert(pieces.end(), chars.begin(), chars.end());

  std::vector<std::pair<std::string, uint64_t>> ranked;
  ranked.reserve(piece_counts.size());
  for (auto& [piece, count] : piece_counts) {
    if (piece == kUnkPiece || chars.count(piece)) continue;
    ranked.emplace_back(piece, count);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (auto& [piece, _] : ranked) {
    if (pieces.size() >= size_cap) break;
    pieces.push_back(std::move(piece));
  }
  return WordPieceVocab(std::move(pieces), size_cap);
}

// Greedy longest-match-first encoding of one token. Falls back to a single
// [UNK] when some position has no matching piece.
inline std::vector<std::string> wordpiece_encode(const WordPieceVocab& vocab,
                                                 std::string_view token) {
  if (token.empty()) return {};
  // Byte offsets of character boundaries.
  std::vector<size_t> bounds;
  size_t pos = 0;
  while (pos < token.size()) {
    bounds.push_back(pos);
    unicode::decode_one(token, pos);
  }
  bounds.push_back(token.size());

  std::vector<std::string> out;
  size_t start = 0;  // index into bounds
  std::string candidate;
  while (start + 1 < bounds.size()) {
    bool matched = false;
    for (size_t end = bounds.size() - 1; end > start; --end) {
      candidate.clear();
      if (start > 0) candidate.append(kContinuationPrefix);
      candidate.append(token.substr(bounds[start], bounds[end] - bounds[start]));
      if (vocab.contains(candidate)) {
        out.push_back(candidate);
        start = end;
        matched = true;
        break;
      }
    }
    if (!matched) return {std::string(kUnkPiece)};
  }
  return out;
}

inline void write_vocab(std::ostream& out, const WordPieceVocab& vocab) {
  for (const auto& p : vocab.pieces()) out << p << '\n';
}

inline WordPieceVocab read_vocab(std::istream& in) {
  std::vector<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pieces.push_back(line);
  }
  const size_t n = pieces.size();
  return WordPieceVocab(std::move(pieces), n);
}

inline WordPieceVocab load_vocab(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open vocabulary file: " + path);
  return read_vocab(in);
}

inline void save_vocab(const std::string& path, const WordPieceVocab& vocab) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write vocabulary file: " + path);
  write_vocab(out, vocab);
}

}  // namespace lingkit::subword
