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

#ifndef SLATE_EVALUATION_H_
#define SLATE_EVALUATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slate/document.h"
#include "slate/eval_boundary.h"
#include "slate/eval_match.h"
#include "json.hpp"

namespace slate {

// What a model produced for one region. `spans` holds every decoded span;
// only task spans enter the matching. A full segmentation (NTI or BI output)
// also gets a boundary similarity score.
struct RegionPrediction {
  std::vector<SentenceSpan> spans;
  bool full_segmentation = false;

  std::vector<SentenceSpan> tasks() const;
};

using PredictionMap = std::map<std::string, RegionPrediction>;

struct EvalOptions {
  double threshold = kDefaultMatchThreshold;
  int transposition_window = kDefaultTranspositionWindow;
  unsigned workers = 1;
};

struct RegionEvaluation {
  std::string region_id;
  MatchResult match;
  ConfusionCounts counts;
  ContextCounts context;
  std::optional<double> b;
  std::optional<double> b_tp;
};

RegionEvaluation evaluate_region(const WritingRegion& region,
                                 const RegionPrediction& prediction,
                                 const EvalOptions& options = {});

struct EvalReport {
  ConfusionCounts counts;
  ContextCounts context;
  ClassificationReport metrics;
  // Unweighted means over regions; b is empty unless every region was
  // predicted as a full segmentation, b_tp skips regions without a tp.
  std::optional<double> b;
  std::optional<double> b_tp;
  std::size_t regions = 0;
};

// Per-region matching, micro-summed counts, one report. Regions without a
// prediction are scored as predicting no spans. Throws DataError for a
// prediction whose region is not in `gold`.
EvalReport corpus_evaluate(const std::vector<WritingRegion>& gold,
                           const PredictionMap& predictions,
                           const EvalOptions& options = {});

// Report JSON; metrics rounded to four decimals, undefined values as null.
nlohmann::json to_json(const EvalReport& report);

double round4(double value);

}  // namespace slate

#endif  // SLATE_EVALUATION_H_
