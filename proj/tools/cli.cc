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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "slate/bench.h"
#include "slate/dataset_io.h"
#include "slate/evaluation.h"
#include "slate/label_codec.h"
#include "slate/synthetic.h"
#include "slate/taggers.h"

namespace slate::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string corpus;
  std::string split;
  std::string scheme;
  std::string input;
  std::string output;
  std::string model;
  std::string segmenter;
  std::string classifier;
  std::string classifier_output;
  std::string mode = "joint";
  std::string layout;
  double threshold = kDefaultMatchThreshold;
  int transposition = kDefaultTranspositionWindow;
  std::uint64_t seed = 1;
  int epochs = 10;
  unsigned workers = 1;
  int runs = 5;
  bool sweep = false;
  std::size_t documents = 40;
};

const std::map<std::string, std::string> kSchemes = {
    {"bi", "bi"}, {"bio", "bio"}, {"nti", "nti"}};

std::filesystem::path corpus_path(const Options& o) {
  if (!o.corpus.empty()) return o.corpus;
  if (auto p = default_corpus_path()) return *p;
  throw UsageError("no corpus: pass --corpus or set SLATE_DATA_DIR");
}

std::optional<std::string> split_filter(const Options& o) {
  if (o.split.empty() || o.split == "all") return std::nullopt;
  return o.split;
}

std::optional<bool> layout_flag(const Options& o) {
  if (o.layout.empty()) return std::nullopt;
  return o.layout == "on";
}

void emit_json(const nlohmann::json& j, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot write " + o.output);
  f << j.dump(2) << '\n';
}

std::filesystem::path required_output(const Options& o) {
  if (o.output.empty()) throw UsageError("--output is required");
  return o.output;
}

int cmd_encode(const Options& o) {
  const auto scheme = parse_scheme(o.scheme);
  const auto corpus = load_corpus(corpus_path(o), split_filter(o));
  std::vector<PredictionRecord> records;
  for (const auto& region : corpus)
    records.push_back(
        {region.region_id, scheme, encode_word_labels(region, scheme).labels,
         std::nullopt});
  save_predictions(records, required_output(o));
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& err) {
  if (o.input.empty()) throw UsageError("--predictions is required");
  auto records = load_prediction_records(o.input);
  std::map<std::string, WritingRegion> regions;
  if (!o.corpus.empty())
    for (auto& r : load_corpus(o.corpus)) regions.emplace(r.region_id, r);
  for (auto& record : records) {
    if (!regions.empty()) {
      auto it = regions.find(record.region_id);
      if (it == regions.end())
        throw DataError("prediction for unknown region '" + record.region_id +
                        "'");
      record.spans = to_region_prediction(record, it->second).spans;
      record.labels.reset();
      continue;
    }
    if (!record.labels) continue;
    auto decoded = decode(LabelSequence{record.scheme, *record.labels});
    for (const auto& w : decoded.repairs)
      err << "warning: " << record.region_id << ": " << w << '\n';
    record.spans = std::move(decoded.spans);
    record.labels.reset();
  }
  save_predictions(records, required_output(o));
  return kExitOk;
}

TrainConfig train_config(const Options& o) {
  TrainConfig c;
  c.epochs = o.epochs;
  c.seed = o.seed;
  c.use_layout = o.layout != "off";
  return c;
}

int cmd_train(const Options& o) {
  const auto corpus = load_corpus(
      corpus_path(o), o.split.empty() ? std::optional<std::string>("train")
                                      : split_filter(o));
  if (corpus.empty()) throw DataError("no regions to train on");
  const auto config = train_config(o);
  if (o.mode == "two-model") {
    if (!o.scheme.empty() && parse_scheme(o.scheme) != LabelScheme::kSentenceBI)
      throw UsageError("two-model mode trains a BI segmenter; drop --scheme or "
                       "use --scheme bi");
    if (o.classifier_output.empty())
      throw UsageError("two-model mode needs --classifier-output");
    const auto out = required_output(o);
    save_model(train_joint(corpus, LabelScheme::kSentenceBI, config), out);
    save_model(train_sentence_classifier(sentences_of(corpus), config),
               std::filesystem::path(o.classifier_output));
    return kExitOk;
  }
  if (o.scheme.empty()) throw UsageError("--scheme is required");
  const auto scheme = parse_scheme(o.scheme);
  if (scheme == LabelScheme::kSentenceBI)
    throw UsageError("joint mode needs --scheme bio or nti");
  save_model(train_joint(corpus, scheme, config), required_output(o));
  return kExitOk;
}

struct LoadedModels {
  std::optional<TaggerModel> joint;
  std::optional<TaggerModel> segmenter;
  std::optional<SentenceClassifierModel> classifier;
};

LoadedModels load_models(const Options& o, bool need_joint, bool need_two) {
  LoadedModels m;
  if (need_joint) {
    if (o.model.empty()) throw UsageError("joint mode needs --model");
    m.joint = load_tagger(std::filesystem::path(o.model));
    if (m.joint->scheme == LabelScheme::kSentenceBI)
      throw UsageError("--model is a BI segmenter; use --mode two-model");
  }
  if (need_two) {
    if (o.segmenter.empty() || o.classifier.empty())
      throw UsageError("two-model mode needs both --segmenter and --classifier");
    m.segmenter = load_tagger(std::filesystem::path(o.segmenter));
    if (m.segmenter->scheme != LabelScheme::kSentenceBI)
      throw UsageError("--segmenter must be a BI model");
    m.classifier = load_classifier(std::filesystem::path(o.classifier));
  }
  return m;
}

int cmd_extract(const Options& o) {
  const bool two = o.mode == "two-model";
  const auto models = load_models(o, !two, two);
  const auto corpus = load_corpus(
      corpus_path(o), o.split.empty() ? std::optional<std::string>("test")
                                      : split_filter(o));
  const auto layout = layout_flag(o);
  std::vector<PredictionRecord> records;
  for (const auto& region : corpus) {
    if (two) {
      records.push_back({region.region_id, LabelScheme::kSentenceBI,
                         std::nullopt,
                         extract_two_model(*models.segmenter,
                                           *models.classifier, region, nullptr,
                                           layout)});
    } else {
      records.push_back(
          {region.region_id, models.joint->scheme,
           predict_labels(*models.joint, region, nullptr, layout).labels,
           std::nullopt});
    }
  }
  save_predictions(records, required_output(o));
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("--predictions is required");
  if (o.threshold < 0.0 || o.threshold > 1.0)
    throw UsageError("--threshold must be in [0, 1]");
  if (o.transposition < 1) throw UsageError("--transposition must be >= 1");
  const auto corpus = load_corpus(corpus_path(o), split_filter(o));
  const auto predictions = load_predictions(o.input, corpus);
  for (const auto& r : corpus)
    if (!predictions.count(r.region_id))
      throw DataError("no prediction for region '" + r.region_id + "'");
  EvalOptions options;
  options.threshold = o.threshold;
  options.transposition_window = o.transposition;
  options.workers = o.workers;
  emit_json(to_json(corpus_evaluate(corpus, predictions, options)), o, out);
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const bool want_joint = !o.model.empty();
  const bool want_two = !o.segmenter.empty() || !o.classifier.empty();
  if (!want_joint && !want_two)
    throw UsageError("bench needs --model and/or --segmenter/--classifier");
  const auto models = load_models(o, want_joint, want_two);
  if (o.runs < 1) throw UsageError("--runs must be >= 1");
  const auto layout = layout_flag(o);

  std::vector<WritingRegion> corpus;
  if (o.sweep) {
    // Interleaved so clock drift spreads evenly over every k.
    for (std::uint64_t s = 0; s < 20; ++s)
      for (std::size_t k : {1, 2, 4, 8, 16, 32})
        corpus.push_back(synthetic_sweep_region(
            k, 64, o.seed * 1000 + s, "sweep-" + std::to_string(k) + "-" +
                                          std::to_string(s)));
  } else {
    corpus = load_corpus(corpus_path(o),
                         o.split.empty() ? std::optional<std::string>("test")
                                         : split_filter(o));
  }

  std::optional<Extractor> joint, two;
  if (models.joint)
    joint = [&](const WritingRegion& r, InvocationCounter* c) {
      return extract_joint(*models.joint, r, c, layout);
    };
  if (models.segmenter)
    two = [&](const WritingRegion& r, InvocationCounter* c) {
      return extract_two_model(*models.segmenter, *models.classifier, r, c,
                               layout);
    };
  emit_json(to_json(compare_latency(joint, two, corpus, o.runs)), o, out);
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(corpus_path(o), split_filter(o));
  emit_json(to_json(corpus_stats(corpus)), o, out);
  return kExitOk;
}

int cmd_synth(const Options& o) {
  SyntheticOptions s;
  s.documents = o.documents;
  s.seed = o.seed;
  s.split = o.split.empty() ? "train" : o.split;
  save_corpus(synthetic_corpus(s), required_output(o));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Joint sentence segmentation and task extraction for ink text"};
  app.require_subcommand(1);
  Options o;

  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus,
                    "Corpus JSONL (default: $SLATE_DATA_DIR/corpus.jsonl)");
    sub->add_option("--split", o.split, "Split to use (train, test, all)");
  };
  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Labeling scheme")
        ->transform(CLI::IsMember(kSchemes, CLI::ignore_case));
  };
  auto add_layout = [&](CLI::App* sub) {
    sub->add_option("--layout", o.layout, "Layout markers and features")
        ->check(CLI::IsMember({"on", "off"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "joint or two-model")
        ->check(CLI::IsMember({"joint", "two-model"}));
  };

  auto* encode = app.add_subcommand("encode", "Write gold word labels");
  add_corpus(encode);
  add_scheme(encode);
  encode->add_option("--output", o.output, "Prediction file to write");

  auto* decode_cmd = app.add_subcommand("decode", "Decode label records");
  decode_cmd->add_option("--predictions", o.input, "Label records")
      ->check(CLI::ExistingFile);
  decode_cmd->add_option("--corpus", o.corpus, "Corpus for length checks");
  decode_cmd->add_option("--output", o.output, "Span records to write");

  auto* train = app.add_subcommand("train", "Train a tagger");
  add_corpus(train);
  add_scheme(train);
  add_mode(train);
  add_layout(train);
  train->add_option("--epochs", o.epochs, "Perceptron passes")->check(CLI::PositiveNumber);
  train->add_option("--seed", o.seed, "Shuffle seed");
  train->add_option("--output", o.output, "Model file (segmenter in two-model)");
  train->add_option("--classifier-output", o.classifier_output,
                    "Classifier model file (two-model)");

  auto* extract = app.add_subcommand("extract", "Predict spans for a corpus");
  add_corpus(extract);
  add_mode(extract);
  add_layout(extract);
  extract->add_option("--model", o.model, "Joint model");
  extract->add_option("--segmenter", o.segmenter, "BI segmenter model");
  extract->add_option("--classifier", o.classifier, "Sentence classifier");
  extract->add_option("--output", o.output, "Prediction file to write");

  auto* eval = app.add_subcommand("eval", "Score predictions against gold");
  add_corpus(eval);
  eval->add_option("--predictions", o.input, "Prediction file")
      ->check(CLI::ExistingFile);
  eval->add_option("--threshold", o.threshold, "Minimum IOU of a match");
  eval->add_option("--transposition", o.transposition,
                   "Boundary transposition window");
  eval->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  eval->add_option("--output", o.output, "Report file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Latency of joint vs two-model");
  add_corpus(bench);
  add_layout(bench);
  bench->add_option("--model", o.model, "Joint model");
  bench->add_option("--segmenter", o.segmenter, "BI segmenter model");
  bench->add_option("--classifier", o.classifier, "Sentence classifier");
  bench->add_option("--runs", o.runs, "Timed passes");
  bench->add_option("--seed", o.seed, "Seed for --sweep regions");
  bench->add_flag("--sweep", o.sweep,
                  "Use synthetic regions of 1..32 sentences (64 words)");
  bench->add_option("--output", o.output, "Report file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Corpus annotation counts");
  add_corpus(stats);
  stats->add_option("--output", o.output, "Report file (default stdout)");

  auto* synth = app.add_subcommand("synth", "Write a synthetic ink-like corpus");
  synth->add_option("--output", o.output, "Corpus file to write");
  synth->add_option("--documents", o.documents, "Documents to generate");
  synth->add_option("--seed", o.seed, "Generator seed");
  synth->add_option("--split", o.split, "Split name for every region");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode->parsed()) return cmd_encode(o);
    if (decode_cmd->parsed()) return cmd_decode(o, err);
    if (train->parsed()) return cmd_train(o);
    if (extract->parsed()) return cmd_extract(o);
    if (eval->parsed()) return cmd_eval(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (synth->parsed()) return cmd_synth(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace slate::cli
