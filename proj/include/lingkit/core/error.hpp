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

#include <stdexcept>
#include <string>

namespace lingkit {

// Base of every error raised by the library. name() is the stable error
// identifier reported by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define LINGKIT_DEFINE_ERROR(Name)                                   \
  class Name : public ::lingkit::Error {                             \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

LINGKIT_DEFINE_ERROR(InvalidArgument);
LINGKIT_DEFINE_ERROR(IoError);

// corpus
LINGKIT_DEFINE_ERROR(InvalidTag);
LINGKIT_DEFINE_ERROR(ManifestParse);
LINGKIT_DEFINE_ERROR(MissingFile);
LINGKIT_DEFINE_ERROR(InsufficientSentences);
LINGKIT_DEFINE_ERROR(EmptyCorpus);

// subword
LINGKIT_DEFINE_ERROR(EmptyInput);
LINGKIT_DEFINE_ERROR(CapTooSmall);
LINGKIT_DEFINE_ERROR(FormatError);

// lid / filter
LINGKIT_DEFINE_ERROR(TooFewLabels);
LINGKIT_DEFINE_ERROR(EmptyLabel);
LINGKIT_DEFINE_ERROR(EmptyText);
LINGKIT_DEFINE_ERROR(UnknownLabel);
LINGKIT_DEFINE_ERROR(LabelMismatch);

// similarity
LINGKIT_DEFINE_ERROR(UnknownLanguage);

// metrics
LINGKIT_DEFINE_ERROR(LengthMismatch);
LINGKIT_DEFINE_ERROR(MalformedTag);
LINGKIT_DEFINE_ERROR(EmptyRuns);
LINGKIT_DEFINE_ERROR(EmptyList);

}  // namespace lingkit
