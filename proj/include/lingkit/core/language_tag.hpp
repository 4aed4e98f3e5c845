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

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lingkit/core/error.hpp"

namespace lingkit {

// A validated ISO 639-3 code: exactly three lowercase ASCII letters.
class LanguageTag {
 public:
  // Trims ASCII whitespace, lowercases, and validates. Throws InvalidTag.
  static LanguageTag parse(std::string_view raw) {
    size_t b = 0, e = raw.size();
    auto space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
             c == '\v';
    };
    while (b < e && space(raw[b])) ++b;
    while (e > b && space(raw[e - 1])) --e;
    const std::string_view core = raw.substr(b, e - b);
    if (core.size() != 3) {
      throw InvalidTag("language tag must be exactly 3 letters: '" +
                       std::string(raw) + "'");
    }
    std::array<char, 3> code{};
    for (size_t i = 0; i < 3; ++i) {
      char c = core[i];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c < 'a' || c > 'z') {
        throw InvalidTag("language tag must contain only ASCII letters: '" +
                         std::string(raw) + "'");
      }
      code[i] = c;
    }
    return LanguageTag(code);
  }

  static std::optional<LanguageTag> try_parse(std::string_view raw) {
    try {
      return parse(raw);
    } catch (const InvalidTag&) {
      return std::nullopt;
    }
  }

  std::string str() const { return std::string(code_.data(), code_.size()); }
  std::string_view view() const { return {code_.data(), code_.size()}; }

  friend auto operator<=>(const LanguageTag&, const LanguageTag&) = default;
  friend bool operator==(const LanguageTag&, const LanguageTag&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LanguageTag& tag) {
    return os << tag.view();
  }

 private:
  explicit LanguageTag(std::array<char, 3> code) : code_(code) {}

  std::array<char, 3> code_;
};

inline LanguageTag parse_language_tag(std::string_view raw) {
  return LanguageTag::parse(raw);
}

// Parses a comma-separated tag list such as "eng,fra,por,ara". An empty
// string is an empty list; an empty item is an error.
inline std::vector<LanguageTag> parse_language_list(std::string_view raw) {
  std::vector<LanguageTag> out;
  if (raw.empty()) return out;
  size_t start = 0;
  while (start <= raw.size()) {
    size_t comma = raw.find(',', start);
    if (comma == std::string_view::npos) comma = raw.size();
    const auto item = raw.substr(start, comma - start);
    if (item.empty()) throw InvalidTag("empty item in tag list '" + std::string(raw) + "'");
    out.push_back(LanguageTag::parse(item));
    start = comma + 1;
  }
  return out;
}

enum class DomainTag { kReligious, kNews, kGovernment, kHealth, kExisting, kWiki, kOther };

inline std::string_view to_string(DomainTag d) {
  switch (d) {
    case DomainTag::kReligious: return "religious";
    case DomainTag::kNews: return "news";
    case DomainTag::kGovernment: return "government";
    case DomainTag::kHealth: return "health";
    case DomainTag::kExisting: return "existing";
    case DomainTag::kWiki: return "wiki";
    case DomainTag::kOther: return "other";
  }
  return "other";
}

// Returns nullopt for values outside the closed set; callers decide whether
// that maps to kOther.
inline std::optional<DomainTag> parse_domain(std::string_view s) {
  for (auto d : {DomainTag::kReligious, DomainTag::kNews, DomainTag::kGovernment,
                 DomainTag::kHealth, DomainTag::kExisting, DomainTag::kWiki,
                 DomainTag::kOther}) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

enum class ScriptTag { kArabic, kCoptic, kEthiopic, kLatin, kVai, kOther };

inline std::string_view to_string(ScriptTag s) {
  switch (s) {
    case ScriptTag::kArabic: return "arabic";
    case ScriptTag::kCoptic: return "coptic";
    case ScriptTag::kEthiopic: return "ethiopic";
    case ScriptTag::kLatin: return "latin";
    case ScriptTag::kVai: return "vai";
    case ScriptTag::kOther: return "other";
  }
  return "other";
}

inline std::optional<ScriptTag> parse_script(std::string_view s) {
  for (auto t : {ScriptTag::kArabic, ScriptTag::kCoptic, ScriptTag::kEthiopic,
                 ScriptTag::kLatin, ScriptTag::kVai, ScriptTag::kOther}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

}  // namespace lingkit

template <>
struct std::hash<lingkit::LanguageTag> {
  size_t operator()(const lingkit::LanguageTag& tag) const noexcept {
    return std::hash<std::string_view>{}(tag.view());
  }
};
