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
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lingkit/core/error.hpp"

namespace lingkit::metrics {

struct RunAggregate {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single run
  std::vector<double> runs;
};

namespace detail {

// Sums in ascending order so the result does not depend on input order.
inline double ordered_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

}  // namespace detail

inline RunAggregate aggregate_runs(std::span<const double> scores) {
  if (scores.empty()) throw EmptyRuns("need at least one run");
  RunAggregate agg;
  agg.runs.assign(scores.begin(), scores.end());
  const double n = static_cast<double>(scores.size());
  agg.mean = detail::ordered_sum(agg.runs) / n;
  if (scores.size() > 1) {
    std::vector<double> sq;
    sq.reserve(scores.size());
    for (double x : scores) sq.push_back((x - agg.mean) * (x - agg.mean));
    agg.std = std::sqrt(detail::ordered_sum(std::move(sq)) / (n - 1.0));
  }
  return agg;
}

struct NamedScore {
  std::string name;
  double score = 0.0;
};

// Unweighted mean over datasets.
inline double benchmark_score(const std::vector<NamedScore>& dataset_scores) {
  if (dataset_scores.empty()) throw EmptyList("need at least one dataset score");
  std::vector<double> values;
  values.reserve(dataset_scores.size());
  for (const auto& s : dataset_scores) values.push_back(s.score);
  const double n = static_cast<double>(values.size());
  return detail::ordered_sum(std::move(values)) / n;
}

}  // namespace lingkit::metrics
