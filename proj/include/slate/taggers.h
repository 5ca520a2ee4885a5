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

#ifndef SLATE_TAGGERS_H_
#define SLATE_TAGGERS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slate/document.h"
#include "slate/label_codec.h"

namespace slate {

inline constexpr std::size_t kMaxWindowWords = 128;

struct TrainConfig {
  int epochs = 10;
  std::uint64_t seed = 1;
  bool averaging = true;
  bool use_layout = true;
  bool use_shape = true;
  int affix_max_len = 3;

  void validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// Counts model invocations: one tagger call per window, one classifier call
// per sentence.
struct InvocationCounter {
  std::size_t tagger = 0;
  std::size_t classifier = 0;
};

// First-order linear model over token features, decoded with Viterbi.
struct TaggerModel {
  LabelScheme scheme = LabelScheme::kSlateNTI;
  TrainConfig config;
  // Per-feature scores, one entry per alphabet label.
  std::unordered_map<std::string, std::vector<double>> feature_weights;
  // (|alphabet| + 1) x |alphabet|, row-major; the last row scores the region
  // start.
  std::vector<double> transition_weights;

  std::size_t label_count() const { return alphabet(scheme).size(); }
  double transition(std::optional<std::size_t> prev, std::size_t next) const;

  friend bool operator==(const TaggerModel&, const TaggerModel&) = default;
};

struct SentenceClassifierModel {
  TrainConfig config;
  std::unordered_map<std::string, double> feature_weights;
  double bias = 0.0;

  friend bool operator==(const SentenceClassifierModel&,
                         const SentenceClassifierModel&) = default;
};

struct LabeledSentence {
  std::vector<std::string> words;
  bool is_task = false;
};

// Word ranges a region is split into for inference: whole lines packed up to
// kMaxWindowWords words, over-long lines cut at the limit.
std::vector<std::pair<std::size_t, std::size_t>> inference_windows(
    const WritingRegion& region, std::size_t max_words = kMaxWindowWords);

// Token feature strings, one list per rendered token.
std::vector<std::vector<std::string>> token_features(
    std::span<const RenderedToken> tokens, const TrainConfig& config,
    bool region_start);

// Averaged structured perceptron; deterministic given corpus order and seed.
TaggerModel train_joint(const std::vector<WritingRegion>& corpus,
                        LabelScheme scheme, const TrainConfig& config);

// Constrained Viterbi per window. `use_layout` overrides the model's layout
// setting when given.
LabelSequence predict_labels(const TaggerModel& model,
                             const WritingRegion& region,
                             InvocationCounter* counter = nullptr,
                             std::optional<bool> use_layout = std::nullopt);

SentenceClassifierModel train_sentence_classifier(
    const std::vector<LabeledSentence>& sentences, const TrainConfig& config);

// Gold sentences of `corpus` as classifier training items.
std::vector<LabeledSentence> sentences_of(
    const std::vector<WritingRegion>& corpus);

bool classify_sentence(const SentenceClassifierModel& model,
                       const std::vector<std::string>& words,
                       InvocationCounter* counter = nullptr);

// Single-pass extraction with a BIO or NTI tagger.
std::vector<SentenceSpan> extract_joint(
    const TaggerModel& model, const WritingRegion& region,
    InvocationCounter* counter = nullptr,
    std::optional<bool> use_layout = std::nullopt);

// Baseline: BI segmentation, then one classifier call per sentence.
std::vector<SentenceSpan> extract_two_model(
    const TaggerModel& segmenter, const SentenceClassifierModel& classifier,
    const WritingRegion& region, InvocationCounter* counter = nullptr,
    std::optional<bool> use_layout = std::nullopt);

// Text model files; load(save(m)) == m and saving is byte-stable.
void save_model(const TaggerModel& model, std::ostream& out);
void save_model(const SentenceClassifierModel& model, std::ostream& out);
void save_model(const TaggerModel& model, const std::filesystem::path& path);
void save_model(const SentenceClassifierModel& model,
                const std::filesystem::path& path);
TaggerModel load_tagger(std::istream& in);
TaggerModel load_tagger(const std::filesystem::path& path);
SentenceClassifierModel load_classifier(std::istream& in);
SentenceClassifierModel load_classifier(const std::filesystem::path& path);

}  // namespace slate

#endif  // SLATE_TAGGERS_H_
