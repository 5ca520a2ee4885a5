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

#ifndef SLATE_BENCH_H_
#define SLATE_BENCH_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "slate/document.h"
#include "slate/taggers.h"

namespace slate {

// Region in, spans out; increments the counter once per model invocation.
using Extractor = std::function<std::vector<SentenceSpan>(
    const WritingRegion&, InvocationCounter*)>;

struct LatencyStats {
  double mean_ms = 0.0;    // mean of the per-run means
  double median_ms = 0.0;  // over every (run, region) sample
  double p95_ms = 0.0;
  double run_stddev_ms = 0.0;  // spread of the per-run means
  std::size_t samples = 0;
};

struct ModeLatency {
  LatencyStats overall;
  InvocationCounter invocations;  // one untimed pass over the corpus
  std::size_t predicted_sentences = 0;
  // Keyed by the region's gold sentence count (predicted count when the
  // region is unannotated).
  std::map<std::size_t, LatencyStats> by_sentence_count;
};

// Warm-up pass, then `runs` timed passes over `corpus`, one region at a time.
ModeLatency measure(const Extractor& extractor,
                    const std::vector<WritingRegion>& corpus, int runs);

struct LatencyReport {
  int runs = 0;
  std::size_t regions = 0;
  std::optional<ModeLatency> joint;
  std::optional<ModeLatency> two_model;
  // two_model mean / joint mean, when both were measured.
  std::optional<double> ratio;
};

LatencyReport compare_latency(const std::optional<Extractor>& joint,
                              const std::optional<Extractor>& two_model,
                              const std::vector<WritingRegion>& corpus,
                              int runs);

nlohmann::json to_json(const LatencyReport& report);

}  // namespace slate

#endif  // SLATE_BENCH_H_
