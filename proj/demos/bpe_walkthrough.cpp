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

// Learns merges on the classic low/lower/newest/widest toy corpus, prints the
// codes file, then segments and re-encodes a few words.

#include <iostream>
#include <map>

#include "lingkit/lingkit.hpp"

int main() {
  namespace sw = lingkit::subword;
  const std::map<std::string, uint64_t> words = {
      {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}};
  const auto model = sw::learn_bpe_from_counts(words, 10);
  std::cout << sw::serialize_codes(model) << '\n';

  std::vector<std::string> sentences;
  for (const auto& [w, n] : words) {
    for (uint64_t i = 0; i < n; ++i) sentences.push_back(w);
  }
  const auto vocab = sw::build_wordpiece_vocab(model, sentences, 64);

  for (const char* word : {"lowest", "newer", "wider"}) {
    const auto pieces = sw::apply_bpe(model, word);
    std::cout << word << "  bpe: " << lingkit::join(pieces)
              << "  decoded: " << sw::bpe_decode(pieces)
              << "  wordpiece: " << lingkit::join(sw::wordpiece_encode(vocab, word)) << '\n';
  }
}
