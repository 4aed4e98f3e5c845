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

#include <vector>

#include "lingkit/lid/model.hpp"
#include "lingkit/metrics/classification.hpp"

namespace lingkit::lid {

using LidEvalReport = metrics::ClassificationReport<LanguageTag>;

// Top-1 predictions scored one-vs-rest per language; macro F1 over the
// languages present in the test set.
inline LidEvalReport evaluate_lid(const LidModel& model,
                                  const std::vector<LabeledSentence>& test,
                                  unsigned threads = 1) {
  for (const auto& item : test) {
    if (!model.label_index(item.lang)) {
      throw UnknownLabel("test label " + item.lang.str() + " is not a model label");
    }
  }
  std::vector<LanguageTag> gold;
  std::vector<LanguageTag> pred;
  gold.reserve(test.size());
  pred.reserve(test.size());
  std::vector<std::string> texts;
  texts.reserve(test.size());
  for (const auto& item : test) {
    gold.push_back(item.lang);
    texts.push_back(item.text);
  }
  for (const auto& p : identify_all(model, texts, threads)) pred.push_back(p.top().lang);
  return metrics::classification_report(gold, pred);
}

}  // namespace lingkit::lid
