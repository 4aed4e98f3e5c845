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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lingkit/filter/foreign_filter.hpp"
#include "support/synthetic.hpp"

namespace lingkit::filter {
namespace {

LanguageTag tag(const char* s) { return LanguageTag::parse(s); }

// Latin-script "eng" versus Ethiopic-script "amh".
class ForeignFilterTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto langs = testing::make_script_languages(5);
    latin_ = new testing::SyntheticLanguage(langs[0]);
    ethiopic_ = new testing::SyntheticLanguage(langs[2]);
    std::vector<LabeledSentence> train = testing::labeled_sample(*latin_, 80, 1);
    const auto amh = testing::labeled_sample(*ethiopic_, 80, 2);
    train.insert(train.end(), amh.begin(), amh.end());
    model_ = new lid::LidModel(lid::train_lid(train));
  }
  static void TearDownTestSuite() {
    delete model_;
    delete latin_;
    delete ethiopic_;
  }

  // Everything is filed under "amh": 100 Ethiopic plus 10 Latin sentences.
  static Corpus mixed_corpus() {
    std::vector<LabeledSentence> items;
    for (auto& s : ethiopic_->sentences(100, 30)) items.push_back({tag("amh"), s});
    for (auto& s : latin_->sentences(10, 31)) items.push_back({tag("amh"), s});
    return Corpus::from_labeled(items);
  }

  static ForeignFilterConfig eng_only(double threshold = kDefaultThreshold) {
    ForeignFilterConfig c;
    c.foreign_set = {tag("eng")};
    c.threshold = threshold;
    return c;
  }

  static inline lid::LidModel* model_ = nullptr;
  static inline testing::SyntheticLanguage* latin_ = nullptr;
  static inline testing::SyntheticLanguage* ethiopic_ = nullptr;
};

TEST_F(ForeignFilterTest, EmptyCorpus) {
  const auto r = filter_foreign(Corpus{}, *model_, eng_only());
  EXPECT_TRUE(r.kept.empty());
  EXPECT_EQ(r.report.total_removed(), 0u);
  EXPECT_EQ(r.report.total_kept(), 0u);
  EXPECT_TRUE(r.report.per_language.empty());
}

TEST_F(ForeignFilterTest, RemovesForeignScript) {
  const auto r = filter_foreign(mixed_corpus(), *model_, eng_only());
  EXPECT_EQ(r.report.total_removed(), 10u);
  EXPECT_EQ(r.kept.count(tag("amh")), 100u);
  EXPECT_EQ(r.report.removed_sample.size(), 10u);
  EXPECT_EQ(r.report.removed_sample[0].predicted, tag("eng"));
}

TEST_F(ForeignFilterTest, UnreachableThresholdRemovesNothing) {
  // A model whose posteriors are never 1.0: no features, priors 0.6 / 0.4.
  const auto flat = lid::LidModel::from_parameters({tag("amh"), tag("eng")}, {}, {},
                                                   {std::log(0.4), std::log(0.6)}, 0.1, {});
  const auto r = filter_foreign(mixed_corpus(), flat, eng_only(1.0));
  EXPECT_EQ(r.report.total_removed(), 0u);
  EXPECT_EQ(filter_foreign(mixed_corpus(), flat, eng_only(0.5)).report.total_removed(), 110u);
}

TEST_F(ForeignFilterTest, ConservationAndMonotonicity) {
  const Corpus c = mixed_corpus();
  size_t previous = c.total() + 1;
  for (double t : {0.0, 0.3, 0.5, 0.9, 0.999999, 1.0}) {
    const auto r = filter_foreign(c, *model_, eng_only(t));
    for (const auto& [lang, counts] : r.report.per_language) {
      EXPECT_EQ(counts.kept + counts.removed, c.count(lang));
    }
    EXPECT_LE(r.report.total_removed(), previous);
    previous = r.report.total_removed();
  }
}

TEST_F(ForeignFilterTest, Idempotent) {
  const auto once = filter_foreign(mixed_corpus(), *model_, eng_only());
  const auto twice = filter_foreign(once.kept, *model_, eng_only());
  EXPECT_EQ(twice.report.total_removed(), 0u);
  EXPECT_EQ(twice.kept.labeled(), once.kept.labeled());
}

TEST_F(ForeignFilterTest, SampleLimitAndThreads) {
  auto cfg = eng_only();
  cfg.sample_limit = 3;
  const auto a = filter_foreign(mixed_corpus(), *model_, cfg, 1);
  const auto b = filter_foreign(mixed_corpus(), *model_, cfg, 8);
  EXPECT_EQ(a.report.removed_sample.size(), 3u);
  EXPECT_EQ(a.kept.labeled(), b.kept.labeled());
  EXPECT_EQ(format_filter_report(a.report), format_filter_report(b.report));
}

TEST_F(ForeignFilterTest, LabelMismatch) {
  ForeignFilterConfig c;  // eng, fra, por, ara: fra is not a model label
  EXPECT_THROW(filter_foreign(mixed_corpus(), *model_, c), LabelMismatch);
  c.foreign_set = {tag("eng"), tag("amh")};
  EXPECT_THROW(filter_foreign(mixed_corpus(), *model_, c), LabelMismatch);
  c.foreign_set = {};
  EXPECT_THROW(filter_foreign(mixed_corpus(), *model_, c), InvalidArgument);
}

TEST_F(ForeignFilterTest, ReportFormat) {
  const auto r = filter_foreign(mixed_corpus(), *model_, eng_only());
  EXPECT_EQ(format_filter_report(r.report), "lang\tinput\tkept\tremoved\namh\t110\t100\t10\n");
}

}  // namespace
}  // namespace lingkit::filter
