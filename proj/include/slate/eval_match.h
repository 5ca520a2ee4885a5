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

#ifndef SLATE_EVAL_MATCH_H_
#define SLATE_EVAL_MATCH_H_

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "slate/document.h"

namespace slate {

inline constexpr double kDefaultMatchThreshold = 0.25;

// Word-index overlap of two spans.
struct Overlap {
  std::size_t intersection = 0;
  std::size_t union_size = 0;

  double ratio() const {
    return union_size == 0 ? 0.0
                           : static_cast<double>(intersection) /
                                 static_cast<double>(union_size);
  }
};

Overlap overlap(const SentenceSpan& a, const SentenceSpan& b);

// Intersection over union of the two spans' word-index sets.
double iou(const SentenceSpan& pred, const SentenceSpan& gold);

struct MatchEdge {
  std::size_t pred_index = 0;
  std::size_t gold_index = 0;
  double weight = 0.0;
  Overlap overlap;

  friend bool operator==(const MatchEdge& a, const MatchEdge& b) {
    return a.pred_index == b.pred_index && a.gold_index == b.gold_index;
  }
};

struct MatchResult {
  std::vector<MatchEdge> edges;  // sorted by pred_index
  std::set<std::size_t> unmatched_pred;
  std::set<std::size_t> unmatched_gold;
  std::optional<double> threshold;  // set once pruned

  double total_weight() const;
};

// Maximum-weight full matching between predicted task spans and gold
// sentences on the complete IOU-weighted bipartite graph. Exactly
// min(|P|, |G|) edges. Ties resolve to the lexicographically smallest sorted
// list of (pred, gold) pairs; weights are compared exactly.
MatchResult full_matching(const std::vector<SentenceSpan>& predicted_tasks,
                          const std::vector<SentenceSpan>& gold);

// Drops edges with weight < threshold.
MatchResult prune(const MatchResult& match, double threshold);

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

// Gold sentences flagged as context-dependent and how many were recovered
// (tasks matched, non-tasks left unmatched).
struct ContextCounts {
  std::size_t task_total = 0;
  std::size_t task_hit = 0;
  std::size_t nontask_total = 0;
  std::size_t nontask_hit = 0;

  ContextCounts& operator+=(const ContextCounts& o) {
    task_total += o.task_total;
    task_hit += o.task_hit;
    nontask_total += o.nontask_total;
    nontask_hit += o.nontask_hit;
    return *this;
  }
  friend bool operator==(const ContextCounts&, const ContextCounts&) = default;
};

// Unmatched predictions count as false positives.
ConfusionCounts confusion(const MatchResult& pruned,
                          const std::vector<SentenceSpan>& predicted_tasks,
                          const std::vector<SentenceSpan>& gold);

ContextCounts context_counts(const MatchResult& pruned,
                             const std::vector<SentenceSpan>& gold);

using Metric = std::optional<double>;

struct ClassMetrics {
  Metric recall;
  Metric precision;
  Metric f1;
  Metric context_recall;
};

struct ClassificationReport {
  ClassMetrics task;
  ClassMetrics nontask;
  Metric accuracy;
};

ClassificationReport classification_report(const ConfusionCounts& counts,
                                           const ContextCounts& context);

ClassificationReport classification_report(const ConfusionCounts& counts,
                                           const MatchResult& pruned,
                                           const std::vector<SentenceSpan>& gold);

}  // namespace slate

#endif  // SLATE_EVAL_MATCH_H_
