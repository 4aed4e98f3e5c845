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

#include <string>
#include <string_view>
#include <vector>

#include "lingkit/core/unicode.hpp"

namespace lingkit {

// Symbol emitted by char_tokenize for a space (U+2423 OPEN BOX).
inline constexpr std::string_view kSpaceSymbol = "\xE2\x90\xA3";

// Light normalization applied to every ingested line:
//   - White_Space runs (including tab/newline) collapse to one U+0020,
//     leading/trailing whitespace is dropped;
//   - remaining Cc and Cf characters are removed, except ZWNJ and ZWJ;
//   - the result is NFC-composed.
// Filtering runs before composition so that removing a format character
// between a base and a combining mark still yields composed output, which
// keeps the function idempotent.
inline std::string clean_text(std::string_view raw) {
  std::string filtered;
  filtered.reserve(raw.size());
  bool pending_space = false;
  size_t pos = 0;
  while (pos < raw.size()) {
    const char32_t cp = unicode::decode_one(raw, pos);
    if (unicode::is_whitespace(cp)) {
      pending_space = !filtered.empty();
      continue;
    }
    if (cp != unicode::kZeroWidthJoiner && cp != unicode::kZeroWidthNonJoiner &&
        unicode::is_control_or_format(cp)) {
      continue;
    }
    if (pending_space) {
      filtered.push_back(' ');
      pending_space = false;
    }
    unicode::append_utf8(filtered, cp);
  }
  return unicode::nfc(filtered);
}

// Maximal runs of non-whitespace characters, in order.
inline std::vector<std::string> whitespace_tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  size_t token_start = std::string_view::npos;
  while (pos < sentence.size()) {
    const size_t here = pos;
    const char32_t cp = unicode::decode_one(sentence, pos);
    if (unicode::is_whitespace(cp)) {
      if (token_start != std::string_view::npos) {
        tokens.emplace_back(sentence.substr(token_start, here - token_start));
        token_start = std::string_view::npos;
      }
    } else if (token_start == std::string_view::npos) {
      token_start = here;
    }
  }
  if (token_start != std::string_view::npos) {
    tokens.emplace_back(sentence.substr(token_start));
  }
  return tokens;
}

inline std::string join(const std::vector<std::string>& parts,
                        std::string_view sep = " ") {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

// One symbol per scalar value; U+0020 becomes kSpaceSymbol.
inline std::vector<std::string> char_tokenize(std::string_view sentence) {
  std::vector<std::string> symbols;
  size_t pos = 0;
  while (pos < sentence.size()) {
    const char32_t cp = unicode::decode_one(sentence, pos);
    if (cp == U' ') {
      symbols.emplace_back(kSpaceSymbol);
    } else {
      symbols.push_back(unicode::encode(cp));
    }
  }
  return symbols;
}

}  // namespace lingkit
