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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lingkit/cli/app.hpp"
#include "support/synthetic.hpp"
#include "support/temp_dir.hpp"

namespace lingkit::cli {
namespace {

using lingkit::testing::slurp;
using lingkit::testing::TempDir;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, HelpListsDefaults) {
  const auto split = run({"split", "--help"});
  EXPECT_EQ(split.code, 0);
  EXPECT_NE(split.out.find("5000"), std::string::npos);
  EXPECT_NE(split.out.find("50"), std::string::npos);
  EXPECT_NE(split.out.find("100"), std::string::npos);

  const auto bpe = run({"learn-bpe", "--help"});
  EXPECT_NE(bpe.out.find("100000"), std::string::npos);

  const auto filt = run({"filter-foreign", "--help"});
  EXPECT_NE(filt.out.find("eng,fra,por,ara"), std::string::npos);
  EXPECT_NE(filt.out.find("0.5"), std::string::npos);

  const auto wp = run({"wordpiece", "--help"});
  EXPECT_NE(wp.out.find("250000"), std::string::npos);
  EXPECT_NE(wp.out.find("110000"), std::string::npos);

  const auto top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  for (const char* sub : {"ingest", "split", "filter-foreign", "learn-bpe", "apply-bpe", "wordpiece",
                          "train-lid", "identify", "eval-lid", "jaccard", "score-seq", "score-cls",
                          "aggregate"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
  }
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"split", "--train", "many"}).code, 2);
  EXPECT_EQ(run({"--threads", "0", "aggregate", "--scores", "1"}).code, 2);
}

TEST(CliTest, OperationErrorsExitOne) {
  TempDir dir;
  const auto r = run({"ingest", "--manifest", dir.file("absent.tsv"), "--out", dir.file("o.tsv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MissingFile"), std::string::npos);
}

TEST(CliTest, LearnBpeOnTinyInput) {
  TempDir dir;
  const auto in = dir.write("in.txt", "ab ab ab\n");
  const auto r = run({"learn-bpe", "--input", in, "--merges", "2", "--out", dir.file("codes")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir.file("codes")), "#version: 0.2\na b\nab </w>\n");
}

TEST(CliTest, ApplyBpeAndDecode) {
  TempDir dir;
  const auto codes = dir.write("codes", "#version: 0.2\na b\nab </w>\n");
  const auto in = dir.write("in.txt", "ab abc\n\nba\n");
  const auto enc = run({"apply-bpe", "--codes", codes, "--input", in});
  ASSERT_EQ(enc.code, 0) << enc.err;
  EXPECT_EQ(enc.out, "ab</w> ab c </w>\n\nb a </w>\n");
  const auto pieces = dir.write("pieces.txt", enc.out);
  const auto dec = run({"apply-bpe", "--decode", "--input", pieces});
  EXPECT_EQ(dec.out, "ab abc\n\nba\n");
}

TEST(CliTest, SplitIsDeterministic) {
  TempDir dir;
  std::string corpus;
  for (int i = 0; i < 200; ++i) corpus += std::string(i % 2 ? "yor" : "hau") + "\ts" + std::to_string(i) + "\n";
  const auto c = dir.write("c.tsv", corpus);
  const std::vector<std::string> base = {"split", "--corpus", c, "--train", "60", "--dev", "10",
                                         "--test", "20", "--seed", "7", "--out"};
  auto a = base, b = base;
  a.push_back(dir.file("a.txt"));
  b.push_back(dir.file("b.txt"));
  ASSERT_EQ(run(a).code, 0);
  ASSERT_EQ(run(b).code, 0);
  EXPECT_EQ(slurp(dir.file("a.txt")), slurp(dir.file("b.txt")));
  EXPECT_FALSE(slurp(dir.file("a.txt")).empty());
}

TEST(CliTest, TrainIdentifyEvaluate) {
  TempDir dir;
  const auto langs = lingkit::testing::make_script_languages(1);
  std::vector<LabeledSentence> train, test;
  for (size_t i = 2; i < 5; ++i) {
    auto tr = lingkit::testing::labeled_sample(langs[i], 50, i);
    auto te = lingkit::testing::labeled_sample(langs[i], 10, 100 + i);
    train.insert(train.end(), tr.begin(), tr.end());
    test.insert(test.end(), te.begin(), te.end());
  }
  write_labeled_file(dir.file("train.tsv"), train);
  write_labeled_file(dir.file("test.tsv"), test);
  ASSERT_EQ(run({"train-lid", "--train", dir.file("train.tsv"), "--out", dir.file("m.bin")}).code, 0);

  const auto ident = run({"identify", "--model", dir.file("m.bin"), test[0].text});
  ASSERT_EQ(ident.code, 0) << ident.err;
  EXPECT_EQ(ident.out.substr(0, 4), test[0].lang.str() + "\t");

  const auto eval = run({"eval-lid", "--model", dir.file("m.bin"), "--test", dir.file("test.tsv"),
                         "--format", "tsv"});
  ASSERT_EQ(eval.code, 0) << eval.err;
  EXPECT_NE(eval.out.find("macro\t\t\t100.00\t30"), std::string::npos) << eval.out;
}

TEST(CliTest, AggregateAndScoring) {
  const auto agg = run({"aggregate", "--scores", "84,85,86"});
  ASSERT_EQ(agg.code, 0) << agg.err;
  EXPECT_NE(agg.out.find("85.00 \xC2\xB1" "1.00"), std::string::npos) << agg.out;

  TempDir dir;
  const auto cls = dir.write("cls.tsv", "A\tA\nA\tB\nB\tB\nB\tB\n");
  const auto sc = run({"score-cls", "--input", cls, "--format", "tsv"});
  ASSERT_EQ(sc.code, 0) << sc.err;
  EXPECT_NE(sc.out.find("macro\t\t\t73.33\t4"), std::string::npos) << sc.out;
}

TEST(CliTest, JaccardMatrix) {
  TempDir dir;
  const auto c = dir.write("c.tsv", "aaa\ta b c\nbbb\tb c d\n");
  const auto r = run({"jaccard", "--corpus", c});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lang,aaa,bbb\naaa,1.00,0.50\nbbb,0.50,1.00\n");
}

}  // namespace
}  // namespace lingkit::cli
