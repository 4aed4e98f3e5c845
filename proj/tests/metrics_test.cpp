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

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lingkit/core/rng.hpp"
#include "lingkit/metrics/aggregate.hpp"
#include "lingkit/metrics/classification.hpp"
#include "lingkit/metrics/report.hpp"
#include "lingkit/metrics/spans.hpp"
#include "support/oracles.hpp"

namespace lingkit::metrics {
namespace {

using Tags = std::vector<std::string>;

TEST(SpanTest, ExtractExamples) {
  EXPECT_EQ(extract_spans(Tags{"B-PER", "I-PER", "O"}), (std::vector<Span>{{0, 2, "PER"}}));
  EXPECT_TRUE(extract_spans(Tags{"O", "O"}).empty());
  EXPECT_EQ(extract_spans(Tags{"B-LOC", "B-LOC"}),
            (std::vector<Span>{{0, 1, "LOC"}, {1, 2, "LOC"}}));
}

TEST(SpanTest, LenientAndStrictModes) {
  const Tags tags = {"O", "I-ORG", "I-ORG", "B-PER", "I-LOC"};
  EXPECT_EQ(extract_spans(tags),
            (std::vector<Span>{{1, 3, "ORG"}, {3, 4, "PER"}, {4, 5, "LOC"}}));
  EXPECT_THROW(extract_spans(tags, BioMode::kStrict), MalformedTag);
  EXPECT_THROW(extract_spans(Tags{"B-PER", "X"}), MalformedTag);
  EXPECT_THROW(extract_spans(Tags{"B-"}), MalformedTag);
  EXPECT_THROW(extract_spans(BioSequence{{"a"}, {"O", "O"}}), LengthMismatch);
}

TEST(SpanTest, PrfExamples) {
  const std::vector<Span> gold = {{0, 2, "PER"}, {3, 4, "LOC"}};
  EXPECT_DOUBLE_EQ(span_prf(gold, gold).f1, 1.0);
  EXPECT_DOUBLE_EQ(span_prf(gold, {{5, 6, "ORG"}}).f1, 0.0);
  const auto s = span_prf(gold, {{0, 2, "PER"}, {2, 3, "LOC"}});
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
  EXPECT_DOUBLE_EQ(s.f1, 0.5);
  EXPECT_DOUBLE_EQ(span_prf({}, {}).f1, 0.0);
}

Tags random_bio(Xoshiro256& rng, size_t len) {
  static const char* kTypes[] = {"PER", "LOC", "ORG"};
  Tags tags;
  for (size_t i = 0; i < len; ++i) {
    const auto k = rng.uniform_below(3);
    if (k == 0) {
      tags.push_back("O");
    } else {
      tags.push_back(std::string(k == 1 ? "B-" : "I-") + kTypes[rng.uniform_below(3)]);
    }
  }
  return tags;
}

TEST(SpanTest, MatchesSetIntersectionOracle) {
  Xoshiro256 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t len = rng.uniform_below(21);
    const Tags gold = random_bio(rng, len);
    const Tags pred = random_bio(rng, len);
    const auto c = count_span_matches(extract_spans(gold), extract_spans(pred));
    const auto o = testing::oracle_span_counts(gold, pred);
    ASSERT_EQ(c.tp, o.tp) << trial;
    ASSERT_EQ(c.fp, o.fp) << trial;
    ASSERT_EQ(c.fn, o.fn) << trial;
  }
}

TEST(SpanTest, RenderThenExtractIsIdentity) {
  Xoshiro256 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t len = rng.uniform_below(21);
    const auto spans = extract_spans(random_bio(rng, len));
    EXPECT_EQ(extract_spans(render_bio(spans, len), BioMode::kStrict), spans);
  }
}

TEST(SpanTest, DatasetReportAndConll) {
  std::istringstream gold_in("Ada\tB-PER\nLovelace\tI-PER\nin\tO\nLondon\tB-LOC\n\nHi\tO\n");
  std::istringstream pred_in("Ada\tB-PER\nLovelace\tI-PER\nin\tO\nLondon\tB-ORG\n\nHi\tB-LOC\n");
  const auto gold = read_conll(gold_in);
  const auto pred = read_conll(pred_in);
  ASSERT_EQ(gold.size(), 2u);
  const auto r = span_report(gold, pred);
  EXPECT_EQ(r.overall.tp, 1u);
  EXPECT_EQ(r.overall.fp, 2u);
  EXPECT_EQ(r.overall.fn, 1u);
  EXPECT_DOUBLE_EQ(r.by_type.at("PER").f1, 1.0);
  EXPECT_DOUBLE_EQ(r.by_type.at("LOC").f1, 0.0);
  EXPECT_EQ(span_table(r).render(ReportFormat::kTsv),
            "type\tP\tR\tF1\ttp\tfp\tfn\n"
            "LOC\t0.00\t0.00\t0.00\t0\t1\t1\n"
            "ORG\t0.00\t0.00\t0.00\t0\t1\t0\n"
            "PER\t100.00\t100.00\t100.00\t1\t0\t0\n"
            "overall\t33.33\t50.00\t40.00\t1\t2\t1\n");
}

TEST(ClassificationTest, HandComputedExample) {
  const auto r = classification_report<std::string>({"A", "A", "B", "B"}, {"A", "B", "B", "B"});
  EXPECT_DOUBLE_EQ(r.per_class[0].score.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[0].score.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[0].score.f1, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].score.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].score.recall, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].score.f1, 0.8);
  EXPECT_NEAR(r.macro_f1, 11.0 / 15.0, 1e-15);
  EXPECT_EQ(r.confusion, (std::vector<std::vector<uint64_t>>{{1, 1}, {0, 2}}));
}

TEST(ClassificationTest, PerfectAndSingleClass) {
  const auto r = classification_report<std::string>({"A", "B", "C"}, {"A", "B", "C"});
  EXPECT_DOUBLE_EQ(r.macro_f1, 1.0);
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(r.confusion[i][j], i == j ? 1u : 0u);
  }
  EXPECT_DOUBLE_EQ(classification_report<std::string>({"A", "A"}, {"A", "A"}).macro_f1, 1.0);
  EXPECT_THROW(classification_report<std::string>({"A"}, {}), LengthMismatch);
}

TEST(ClassificationTest, ConservationAndRelabelingInvariance) {
  Xoshiro256 rng(44);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  const std::vector<std::string> renamed = {"zz", "yy", "xx", "ww"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> gold, pred, gold2, pred2;
    for (size_t i = 0, n = 1 + rng.uniform_below(30); i < n; ++i) {
      const auto g = rng.uniform_below(4), p = rng.uniform_below(4);
      gold.push_back(names[g]);
      pred.push_back(names[p]);
      gold2.push_back(renamed[g]);
      pred2.push_back(renamed[p]);
    }
    const auto r = classification_report(gold, pred);
    uint64_t total = 0;
    for (size_t i = 0; i < r.classes.size(); ++i) {
      uint64_t row = 0;
      for (uint64_t v : r.confusion[i]) row += v;
      EXPECT_EQ(row, r.per_class[i].support);
      total += row;
    }
    EXPECT_EQ(total, gold.size());
    EXPECT_NEAR(classification_report(gold2, pred2).macro_f1, r.macro_f1, 1e-12);
  }
}

TEST(AggregateTest, Examples) {
  const std::vector<double> runs = {84.0, 85.0, 86.0};
  const auto a = aggregate_runs(runs);
  EXPECT_EQ(a.mean, 85.0);
  EXPECT_EQ(a.std, 1.0);
  const std::vector<double> one = {72.5};
  EXPECT_EQ(aggregate_runs(one).mean, 72.5);
  EXPECT_EQ(aggregate_runs(one).std, 0.0);
  const std::vector<double> fives = {5, 5, 5, 5};
  EXPECT_EQ(aggregate_runs(fives).std, 0.0);
  EXPECT_THROW(aggregate_runs(std::vector<double>{}), EmptyRuns);
}

TEST(AggregateTest, PermutationInvariant) {
  Xoshiro256 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs;
    for (size_t i = 0, n = 1 + rng.uniform_below(8); i < n; ++i) xs.push_back(100.0 * rng.uniform01());
    const auto a = aggregate_runs(xs);
    shuffle_prefix(xs, xs.size(), rng);
    const auto b = aggregate_runs(xs);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std, b.std);
  }
}

TEST(AggregateTest, BenchmarkScore) {
  EXPECT_EQ(benchmark_score({{"x", 80.0}, {"y", 90.0}}), 85.0);
  EXPECT_EQ(benchmark_score({{"x", 61.25}, {"y", 61.25}, {"z", 61.25}}), 61.25);
  EXPECT_THROW(benchmark_score({}), EmptyList);
}

TEST(ReportTest, Formatting) {
  const std::vector<double> runs = {84.0, 85.0, 86.0};
  EXPECT_EQ(format_aggregate(aggregate_runs(runs)), "85.00 \xC2\xB1" "1.00");
  EXPECT_EQ(format_score(97.41), "97.41");
  EXPECT_EQ(format_score(-0.001), "0.00");
  const std::vector<DatasetResult> single = {{"lid", aggregate_runs(std::vector<double>{97.41})}};
  EXPECT_EQ(benchmark_table(single).render(ReportFormat::kTsv),
            "dataset\tscore\nlid\t97.41\nbenchmark\t97.41\n");
}

TEST(ReportTest, EmptyClassificationIsHeaderOnly) {
  const ClassificationReport<std::string> empty;
  EXPECT_EQ(emit_classification_report(empty, ReportFormat::kTsv), "class\tP\tR\tF1\tsupport\n");
}

TEST(ReportTest, ClassificationTableAndConfusion) {
  const auto r = classification_report<std::string>({"A", "A", "B", "B"}, {"A", "B", "B", "B"});
  EXPECT_EQ(emit_classification_report(r, ReportFormat::kTsv),
            "class\tP\tR\tF1\tsupport\n"
            "A\t100.00\t50.00\t66.67\t2\n"
            "B\t66.67\t100.00\t80.00\t2\n"
            "macro\t\t\t73.33\t4\n");
  EXPECT_EQ(confusion_csv(r), "gold\\pred,A,B\nA,1,1\nB,0,2\n");
  EXPECT_EQ(emit_classification_report(r, ReportFormat::kHuman).substr(0, 31),
            "class  P       R       F1     s");
}

}  // namespace
}  // namespace lingkit::metrics
