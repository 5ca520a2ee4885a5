// Copyright 2026 The slate-toolkit Authors.
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

#include <gtest/gtest.h>

#include "slate/evaluation.h"
#include "support.h"

namespace slate {
namespace {

using testing::span;
constexpr auto kNon = SentenceLabel::kNonTask;

WritingRegion region(const std::string& id, std::size_t n,
                     std::vector<SentenceSpan> gold) {
  std::vector<std::string> words;
  for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
  return make_region(id, words, std::move(gold));
}

RegionPrediction full(std::vector<SentenceSpan> spans) {
  return RegionPrediction{std::move(spans), true};
}

TEST(CorpusEvaluate, Additivity) {
  std::vector<WritingRegion> gold = {region("a", 4, {span(0, 2), span(2, 4, kNon)}),
                                     region("b", 3, {span(0, 3)})};
  PredictionMap preds = {{"a", full({span(0, 2), span(2, 4, kNon)})},
                         {"b", full({span(0, 3)})}};
  auto r = corpus_evaluate(gold, preds);
  EXPECT_EQ(r.counts, (ConfusionCounts{2, 0, 1, 0}));
  EXPECT_DOUBLE_EQ(*r.metrics.task.f1, 1.0);
  EXPECT_DOUBLE_EQ(*r.b, 1.0);
  EXPECT_DOUBLE_EQ(*r.b_tp, 1.0);
}

TEST(CorpusEvaluate, MicroSum) {
  std::vector<WritingRegion> gold = {region("a", 2, {span(0, 2, kNon)}),
                                     region("b", 2, {span(0, 2)})};
  PredictionMap preds = {{"a", full({span(0, 2)})}, {"b", full({span(0, 2)})}};
  auto r = corpus_evaluate(gold, preds);
  EXPECT_EQ(r.counts.tp, 1u);
  EXPECT_EQ(r.counts.fp, 1u);
  EXPECT_DOUBLE_EQ(*r.metrics.task.precision, 0.5);
}

TEST(CorpusEvaluate, EmptyPredictions) {
  std::vector<WritingRegion> gold = {region("a", 4, {span(0, 2), span(2, 4, kNon)})};
  auto r = corpus_evaluate(gold, {});
  EXPECT_DOUBLE_EQ(*r.metrics.task.recall, 0.0);
  EXPECT_FALSE(r.metrics.task.precision.has_value());
  EXPECT_FALSE(r.b.has_value());
  EXPECT_FALSE(r.b_tp.has_value());
}

TEST(CorpusEvaluate, UnknownRegion) {
  std::vector<WritingRegion> gold = {region("a", 2, {span(0, 2)})};
  PredictionMap preds = {{"zzz", full({span(0, 2)})}};
  EXPECT_THROW(corpus_evaluate(gold, preds), DataError);
}

TEST(CorpusEvaluate, BioPredictionsHaveNoB) {
  std::vector<WritingRegion> gold = {region("a", 4, {span(0, 2), span(2, 4, kNon)})};
  PredictionMap preds = {{"a", RegionPrediction{{span(0, 2)}, false}}};
  auto r = corpus_evaluate(gold, preds);
  EXPECT_FALSE(r.b.has_value());
  EXPECT_DOUBLE_EQ(*r.b_tp, 1.0);
}

TEST(CorpusEvaluate, BIsPerRegionMean) {
  std::vector<WritingRegion> gold = {
      region("a", 9, {span(0, 4), span(4, 9, kNon)}),
      region("b", 9, {span(0, 9, kNon)})};
  // a: {0,5,9} vs {0,4,9} -> 5/6. b: {0,5,9} vs {0,9} -> 2/3.
  PredictionMap preds = {
      {"a", full({span(0, 5), span(5, 9, kNon)})},
      {"b", full({span(0, 5, kNon), span(5, 9, kNon)})}};
  auto r = corpus_evaluate(gold, preds);
  EXPECT_NEAR(*r.b, (5.0 / 6.0 + 2.0 / 3.0) / 2.0, 1e-12);
}

TEST(CorpusEvaluate, WorkerCountDoesNotMatter) {
  std::mt19937_64 rng(41);
  std::vector<WritingRegion> gold;
  PredictionMap preds;
  for (int i = 0; i < 60; ++i) {
    auto r = testing::random_region(rng, 30, 8, "r" + std::to_string(i));
    preds[r.region_id] = full(testing::random_partition(rng, r.size(), 8));
    gold.push_back(std::move(r));
  }
  const auto one = to_json(corpus_evaluate(gold, preds, {0.25, 2, 1}));
  for (unsigned w : {2u, 3u, 7u})
    EXPECT_EQ(to_json(corpus_evaluate(gold, preds, {0.25, 2, w})), one);
  std::reverse(gold.begin(), gold.end());
  EXPECT_EQ(to_json(corpus_evaluate(gold, preds)), one);
}

TEST(ReportJson, Shape) {
  std::vector<WritingRegion> gold = {region("a", 4, {span(0, 2), span(2, 4, kNon)})};
  auto j = to_json(corpus_evaluate(gold, {}));
  EXPECT_TRUE(j["task"]["prec"].is_null());
  EXPECT_EQ(j["task"]["rec"], 0.0);
  EXPECT_EQ(j["counts"]["fn"], 1);
  EXPECT_TRUE(j.contains("accuracy"));
  EXPECT_TRUE(j["b"].is_null());
  EXPECT_TRUE(j["b_tp"].is_null());
  EXPECT_TRUE(j["nontask"].contains("context_rec"));
}

TEST(Round4, FourDecimals) {
  EXPECT_DOUBLE_EQ(round4(2.0 / 3.0), 0.6667);
  EXPECT_DOUBLE_EQ(round4(0.875), 0.875);
}

}  // namespace
}  // namespace slate
