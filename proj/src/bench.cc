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

#include "slate/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "slate/evaluation.h"

namespace slate {
namespace {

using Clock = std::chrono::steady_clock;

LatencyStats summarize(const std::vector<std::vector<double>>& per_run) {
  LatencyStats s;
  std::vector<double> all;
  std::vector<double> run_means;
  for (const auto& run : per_run) {
    if (run.empty()) continue;
    double sum = 0.0;
    for (double v : run) sum += v;
    run_means.push_back(sum / static_cast<double>(run.size()));
    all.insert(all.end(), run.begin(), run.end());
  }
  if (all.empty()) return s;
  s.samples = all.size();
  double total = 0.0;
  for (double m : run_means) total += m;
  s.mean_ms = total / static_cast<double>(run_means.size());
  double var = 0.0;
  for (double m : run_means) var += (m - s.mean_ms) * (m - s.mean_ms);
  s.run_stddev_ms = std::sqrt(var / static_cast<double>(run_means.size()));
  std::sort(all.begin(), all.end());
  const std::size_t n = all.size();
  s.median_ms = n % 2 ? all[n / 2] : 0.5 * (all[n / 2 - 1] + all[n / 2]);
  const auto p95 = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(n)));
  s.p95_ms = all[std::clamp<std::size_t>(p95, 1, n) - 1];
  return s;
}

nlohmann::json stats_json(const LatencyStats& s) {
  return {{"mean_ms", round4(s.mean_ms)},
          {"median_ms", round4(s.median_ms)},
          {"p95_ms", round4(s.p95_ms)},
          {"run_stddev_ms", round4(s.run_stddev_ms)},
          {"samples", s.samples}};
}

nlohmann::json mode_json(const ModeLatency& m) {
  nlohmann::json buckets = nlohmann::json::object();
  for (const auto& [k, s] : m.by_sentence_count)
    buckets[std::to_string(k)] = stats_json(s);
  return {{"latency", stats_json(m.overall)},
          {"invocations",
           {{"tagger", m.invocations.tagger},
            {"classifier", m.invocations.classifier}}},
          {"predicted_sentences", m.predicted_sentences},
          {"by_sentence_count", std::move(buckets)}};
}

}  // namespace

ModeLatency measure(const Extractor& extractor,
                    const std::vector<WritingRegion>& corpus, int runs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  ModeLatency out;

  std::vector<std::size_t> bucket(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto spans = extractor(corpus[i], &out.invocations);
    out.predicted_sentences += spans.size();
    bucket[i] = corpus[i].gold_sentences.empty()
                    ? spans.size()
                    : corpus[i].gold_sentences.size();
  }

  std::vector<std::vector<double>> per_run(runs);
  std::map<std::size_t, std::vector<std::vector<double>>> per_bucket;
  for (int r = 0; r < runs; ++r) {
    per_run[r].reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto t0 = Clock::now();
      const auto spans = extractor(corpus[i], nullptr);
      const auto t1 = Clock::now();
      (void)spans;
      const double ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      per_run[r].push_back(ms);
      auto& b = per_bucket[bucket[i]];
      b.resize(runs);
      b[r].push_back(ms);
    }
  }
  out.overall = summarize(per_run);
  for (const auto& [k, samples] : per_bucket)
    out.by_sentence_count[k] = summarize(samples);
  return out;
}

LatencyReport compare_latency(const std::optional<Extractor>& joint,
                              const std::optional<Extractor>& two_model,
                              const std::vector<WritingRegion>& corpus,
                              int runs) {
  LatencyReport report;
  report.runs = runs;
  report.regions = corpus.size();
  if (joint) report.joint = measure(*joint, corpus, runs);
  if (two_model) report.two_model = measure(*two_model, corpus, runs);
  if (report.joint && report.two_model && report.joint->overall.mean_ms > 0.0)
    report.ratio =
        report.two_model->overall.mean_ms / report.joint->overall.mean_ms;
  return report;
}

nlohmann::json to_json(const LatencyReport& report) {
  nlohmann::json j = {{"runs", report.runs}, {"regions", report.regions}};
  j["joint"] = report.joint ? mode_json(*report.joint) : nlohmann::json(nullptr);
  j["two_model"] =
      report.two_model ? mode_json(*report.two_model) : nlohmann::json(nullptr);
  j["ratio"] = report.ratio ? nlohmann::json(round4(*report.ratio))
                            : nlohmann::json(nullptr);
  return j;
}

}  // namespace slate
