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

#ifndef SLATE_DATASET_IO_H_
#define SLATE_DATASET_IO_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "slate/document.h"
#include "slate/evaluation.h"
#include "slate/label_codec.h"

namespace slate {

// Corpus files are JSON Lines, one writing region per line:
//   {"region_id", "doc_id", "split", "words": [..], "line_breaks": [..],
//    "bullets": [..], "sentences": [{"start","end","label","context"}]}
nlohmann::json region_to_json(const WritingRegion& region);
WritingRegion region_from_json(const nlohmann::json& record);

// Loads and validates every region, keeping those whose split matches
// `split` when given. Errors carry the file name and line number.
std::vector<WritingRegion> load_corpus(
    const std::filesystem::path& path,
    const std::optional<std::string>& split = std::nullopt);

void save_corpus(const std::vector<WritingRegion>& regions,
                 const std::filesystem::path& path);

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t regions = 0;
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t tasks = 0;
  std::size_t nontasks = 0;
  std::size_t context_tasks = 0;
  std::size_t context_nontasks = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const std::vector<WritingRegion>& regions);
nlohmann::json to_json(const CorpusStats& stats);

// $SLATE_DATA_DIR/corpus.jsonl, or empty when the variable is unset.
std::optional<std::filesystem::path> default_corpus_path();

// One prediction-file line: word labels under a scheme, or decoded spans.
struct PredictionRecord {
  std::string region_id;
  LabelScheme scheme = LabelScheme::kSlateNTI;
  std::optional<std::vector<Label>> labels;
  std::optional<std::vector<SentenceSpan>> spans;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

nlohmann::json prediction_to_json(const PredictionRecord& record);
PredictionRecord prediction_from_json(const nlohmann::json& record);

void save_predictions(const std::vector<PredictionRecord>& records,
                      const std::filesystem::path& path);
std::vector<PredictionRecord> load_prediction_records(
    const std::filesystem::path& path);

// Joins records against `corpus`: label records are length-checked and
// decoded; unknown regions and length mismatches raise DataError.
RegionPrediction to_region_prediction(const PredictionRecord& record,
                                      const WritingRegion& region);
PredictionMap load_predictions(const std::filesystem::path& path,
                               const std::vector<WritingRegion>& corpus);

}  // namespace slate

#endif  // SLATE_DATASET_IO_H_
