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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lingkit/core/error.hpp"

namespace lingkit::metrics {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
};

// Rates from counts. A rate with an empty denominator is 0, and F1 is 0
// whenever precision + recall is 0.
inline PrfScore make_prf(uint64_t tp, uint64_t fp, uint64_t fn) {
  PrfScore s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  s.recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  const double pr = s.precision + s.recall;
  s.f1 = pr > 0.0 ? 2.0 * s.precision * s.recall / pr : 0.0;
  return s;
}

template <typename Label>
struct ClassScore {
  Label label;
  PrfScore score;
  uint64_t support = 0;
};

// Per-class one-vs-rest scores over the sorted union of gold and predicted
// labels. confusion[i][j] counts items of gold class i predicted as class j
// (same indexing as classes). macro_f1 averages F1 over classes with
// non-zero gold support.
template <typename Label>
struct ClassificationReport {
  std::vector<Label> classes;
  std::vector<ClassScore<Label>> per_class;
  std::vector<std::vector<uint64_t>> confusion;
  double macro_f1 = 0.0;
  uint64_t total = 0;
};

template <typename Label>
ClassificationReport<Label> classification_report(const std::vector<Label>& gold,
                                                  const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) {
    throw LengthMismatch("gold has " + std::to_string(gold.size()) + " labels, pred has " +
                         std::to_string(pred.size()));
  }
  ClassificationReport<Label> report;
  std::set<Label> all(gold.begin(), gold.end());
  all.insert(pred.begin(), pred.end());
  report.classes.assign(all.begin(), all.end());
  const size_t k = report.classes.size();
  std::map<Label, size_t> index;
  for (size_t i = 0; i < k; ++i) index.emplace(report.classes[i], i);

  report.confusion.assign(k, std::vector<uint64_t>(k, 0));
  for (size_t i = 0; i < gold.size(); ++i) {
    ++report.confusion[index.at(gold[i])][index.at(pred[i])];
  }
  report.total = gold.size();

  double f1_sum = 0.0;
  size_t present = 0;
  for (size_t c = 0; c < k; ++c) {
    uint64_t tp = report.confusion[c][c];
    uint64_t row = 0, col = 0;
    for (size_t j = 0; j < k; ++j) {
      row += report.confusion[c][j];
      col += report.confusion[j][c];
    }
    ClassScore<Label> cs{report.classes[c], make_prf(tp, col - tp, row - tp), row};
    if (row > 0) {
      f1_sum += cs.score.f1;
      ++present;
    }
    report.per_class.push_back(std::move(cs));
  }
  report.macro_f1 = present ? f1_sum / static_cast<double>(present) : 0.0;
  return report;
}

}  // namespace lingkit::metrics
