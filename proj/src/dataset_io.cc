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

#include "slate/dataset_io.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace slate {
namespace {

using nlohmann::json;

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

json span_to_json(const SentenceSpan& s, bool with_context) {
  json j = {{"start", s.start}, {"end", s.end},
            {"label", std::string(to_string(s.label))}};
  if (with_context) j["context"] = s.context;
  return j;
}

SentenceSpan span_from_json(const json& j) {
  SentenceSpan s;
  s.start = j.at("start").get<std::size_t>();
  s.end = j.at("end").get<std::size_t>();
  s.label = parse_sentence_label(j.at("label").get<std::string>());
  s.context = j.value("context", false);
  return s;
}

template <typename Fn>
void for_each_line(const std::filesystem::path& path, Fn&& fn) {
  auto in = open_input(path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(json::parse(line), lineno);
    } catch (const json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": malformed record: " + e.what());
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " +
                      e.what());
    }
  }
}

}  // namespace

json region_to_json(const WritingRegion& region) {
  json words = json::array();
  for (const auto& w : region.words) words.push_back(w.text);
  json sentences = json::array();
  for (const auto& s : region.gold_sentences)
    sentences.push_back(span_to_json(s, true));
  return {{"region_id", region.region_id},
          {"doc_id", region.doc_id},
          {"split", region.split},
          {"words", std::move(words)},
          {"line_breaks", region.layout.line_break_before},
          {"bullets", region.layout.bullet_before},
          {"sentences", std::move(sentences)}};
}

WritingRegion region_from_json(const json& record) {
  WritingRegion region;
  region.region_id = record.at("region_id").get<std::string>();
  region.doc_id = record.value("doc_id", std::string());
  region.split = record.value("split", std::string());
  const auto& words = record.at("words");
  for (std::size_t i = 0; i < words.size(); ++i)
    region.words.push_back(Word{words[i].get<std::string>(), i});
  if (record.contains("line_breaks"))
    for (const auto& v : record["line_breaks"])
      region.layout.line_break_before.insert(v.get<std::size_t>());
  if (record.contains("bullets"))
    for (const auto& v : record["bullets"])
      region.layout.bullet_before.insert(v.get<std::size_t>());
  if (record.contains("sentences"))
    for (const auto& s : record["sentences"])
      region.gold_sentences.push_back(span_from_json(s));
  return region;
}

std::vector<WritingRegion> load_corpus(const std::filesystem::path& path,
                                       const std::optional<std::string>& split) {
  std::vector<WritingRegion> regions;
  std::set<std::string> seen;
  for_each_line(path, [&](const json& record, std::size_t) {
    auto region = region_from_json(record);
    if (!seen.insert(region.region_id).second)
      throw DataError("duplicate region_id '" + region.region_id + "'");
    const auto violations = validate_region(region);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "region '" << region.region_id << "' is invalid:";
      for (const auto& v : violations) msg << " [" << v.message << "]";
      throw DataError(msg.str());
    }
    if (!split || region.split == *split) regions.push_back(std::move(region));
  });
  return regions;
}

void save_corpus(const std::vector<WritingRegion>& regions,
                 const std::filesystem::path& path) {
  auto out = open_output(path);
  for (const auto& r : regions) out << region_to_json(r).dump() << '\n';
}

CorpusStats corpus_stats(const std::vector<WritingRegion>& regions) {
  CorpusStats stats;
  std::set<std::string> docs;
  for (const auto& r : regions) {
    docs.insert(r.doc_id);
    ++stats.regions;
    stats.words += r.size();
    for (const auto& s : r.gold_sentences) {
      ++stats.sentences;
      if (s.label == SentenceLabel::kTask) {
        ++stats.tasks;
        if (s.context) ++stats.context_tasks;
      } else if (s.label == SentenceLabel::kNonTask) {
        ++stats.nontasks;
        if (s.context) ++stats.context_nontasks;
      }
    }
  }
  stats.documents = docs.size();
  return stats;
}

json to_json(const CorpusStats& s) {
  return {{"documents", s.documents},
          {"regions", s.regions},
          {"words", s.words},
          {"sentences", s.sentences},
          {"tasks", s.tasks},
          {"nontasks", s.nontasks},
          {"context_tasks", s.context_tasks},
          {"context_nontasks", s.context_nontasks}};
}

std::optional<std::filesystem::path> default_corpus_path() {
  const char* dir = std::getenv("SLATE_DATA_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "corpus.jsonl";
}

json prediction_to_json(const PredictionRecord& record) {
  json j = {{"region_id", record.region_id},
            {"scheme", std::string(to_string(record.scheme))}};
  if (record.labels) {
    json labels = json::array();
    for (Label l : *record.labels) labels.push_back(std::string(to_string(l)));
    j["labels"] = std::move(labels);
  }
  if (record.spans) {
    json spans = json::array();
    for (const auto& s : *record.spans) spans.push_back(span_to_json(s, false));
    j["spans"] = std::move(spans);
  }
  return j;
}

PredictionRecord prediction_from_json(const json& j) {
  PredictionRecord record;
  record.region_id = j.at("region_id").get<std::string>();
  record.scheme = parse_scheme(j.at("scheme").get<std::string>());
  if (j.contains("labels")) {
    std::vector<Label> labels;
    for (const auto& l : j["labels"]) {
      Label label = parse_label(l.get<std::string>());
      if (!in_alphabet(record.scheme, label))
        throw DataError("label " + std::string(to_string(label)) +
                        " not in scheme " +
                        std::string(to_string(record.scheme)));
      labels.push_back(label);
    }
    record.labels = std::move(labels);
  }
  if (j.contains("spans")) {
    std::vector<SentenceSpan> spans;
    for (const auto& s : j["spans"]) spans.push_back(span_from_json(s));
    record.spans = std::move(spans);
  }
  if (record.labels.has_value() == record.spans.has_value())
    throw DataError("prediction for '" + record.region_id +
                    "' needs exactly one of labels or spans");
  return record;
}

void save_predictions(const std::vector<PredictionRecord>& records,
                      const std::filesystem::path& path) {
  auto out = open_output(path);
  for (const auto& r : records) out << prediction_to_json(r).dump() << '\n';
}

std::vector<PredictionRecord> load_prediction_records(
    const std::filesystem::path& path) {
  std::vector<PredictionRecord> records;
  for_each_line(path, [&](const json& j, std::size_t) {
    records.push_back(prediction_from_json(j));
  });
  return records;
}

RegionPrediction to_region_prediction(const PredictionRecord& record,
                                      const WritingRegion& region) {
  RegionPrediction out;
  const bool full_scheme = record.scheme != LabelScheme::kSlateBIO;
  if (record.labels) {
    if (record.labels->size() != region.size())
      throw DataError("length mismatch for region '" + record.region_id +
                      "': " + std::to_string(record.labels->size()) +
                      " labels for " + std::to_string(region.size()) +
                      " words");
    out.spans = decode(LabelSequence{record.scheme, *record.labels}).spans;
    out.full_segmentation = full_scheme;
  } else {
    out.spans = *record.spans;
    if (!spans_disjoint(out.spans, region.size()))
      throw DataError("spans of region '" + record.region_id +
                      "' overlap or exceed its " +
                      std::to_string(region.size()) + " words");
    out.full_segmentation =
        full_scheme && spans_partition(out.spans, region.size());
  }
  return out;
}

PredictionMap load_predictions(const std::filesystem::path& path,
                               const std::vector<WritingRegion>& corpus) {
  std::map<std::string, const WritingRegion*> index;
  for (const auto& r : corpus) index.emplace(r.region_id, &r);
  PredictionMap out;
  for (const auto& record : load_prediction_records(path)) {
    auto it = index.find(record.region_id);
    if (it == index.end())
      throw DataError("prediction for unknown region '" + record.region_id +
                      "'");
    out[record.region_id] = to_region_prediction(record, *it->second);
  }
  return out;
}

}  // namespace slate
