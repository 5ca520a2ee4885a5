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

#include "slate/evaluation.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace slate {
namespace {

nlohmann::json metric_json(const Metric& m) {
  if (!m) return nullptr;
  return round4(*m);
}

nlohmann::json class_json(const ClassMetrics& m) {
  return {{"rec", metric_json(m.recall)},
          {"prec", metric_json(m.precision)},
          {"f1", metric_json(m.f1)},
          {"context_rec", metric_json(m.context_recall)}};
}

}  // namespace

std::vector<SentenceSpan> RegionPrediction::tasks() const {
  std::vector<SentenceSpan> out;
  for (const auto& s : spans)
    if (s.is_task()) out.push_back(s);
  return out;
}

double round4(double value) { return std::round(value * 1e4) / 1e4; }

RegionEvaluation evaluate_region(const WritingRegion& region,
                                 const RegionPrediction& prediction,
                                 const EvalOptions& options) {
  const auto& gold = region.gold_sentences;
  const auto pred_tasks = prediction.tasks();
  RegionEvaluation out;
  out.region_id = region.region_id;
  out.match = prune(full_matching(pred_tasks, gold), options.threshold);
  out.counts = confusion(out.match, pred_tasks, gold);
  out.context = context_counts(out.match, gold);
  if (prediction.full_segmentation) {
    out.b = boundary_similarity(boundaries_of(prediction.spans, region.size()),
                                boundaries_of(gold, region.size()),
                                options.transposition_window);
  }
  out.b_tp = b_tp(out.match, pred_tasks, gold, region.size(),
                  options.transposition_window);
  return out;
}

EvalReport corpus_evaluate(const std::vector<WritingRegion>& gold,
                           const PredictionMap& predictions,
                           const EvalOptions& options) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < gold.size(); ++i)
    index.emplace(gold[i].region_id, i);
  for (const auto& [id, _] : predictions)
    if (!index.count(id))
      throw DataError("prediction for unknown region '" + id + "'");

  const RegionPrediction empty;
  std::vector<RegionEvaluation> results(gold.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < gold.size(); i += step) {
      auto it = predictions.find(gold[i].region_id);
      results[i] = evaluate_region(
          gold[i], it == predictions.end() ? empty : it->second, options);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  EvalReport report;
  report.regions = gold.size();
  double b_sum = 0.0, b_tp_sum = 0.0;
  std::size_t b_count = 0, b_tp_count = 0;
  bool all_full = !gold.empty();
  for (const auto& r : results) {
    report.counts += r.counts;
    report.context += r.context;
    if (r.b) {
      b_sum += *r.b;
      ++b_count;
    } else {
      all_full = false;
    }
    if (r.b_tp) {
      b_tp_sum += *r.b_tp;
      ++b_tp_count;
    }
  }
  report.metrics = classification_report(report.counts, report.context);
  if (all_full && b_count > 0) report.b = b_sum / static_cast<double>(b_count);
  if (b_tp_count > 0) report.b_tp = b_tp_sum / static_cast<double>(b_tp_count);
  return report;
}

nlohmann::json to_json(const EvalReport& report) {
  return {{"counts",
           {{"tp", report.counts.tp},
            {"fp", report.counts.fp},
            {"tn", report.counts.tn},
            {"fn", report.counts.fn}}},
          {"task", class_json(report.metrics.task)},
          {"nontask", class_json(report.metrics.nontask)},
          {"accuracy", metric_json(report.metrics.accuracy)},
          {"b", metric_json(report.b)},
          {"b_tp", metric_json(report.b_tp)},
          {"regions", report.regions}};
}

}  // namespace slate
