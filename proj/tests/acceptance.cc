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

// Acceptance suite: one line per criterion, grouped so that timing and
// dataset-dependent checks can be run (and skipped) separately.
//
//   slate_acceptance [--only core|latency|corpus]
//
// Exit status: 0 all selected criteria pass, 1 any failure, 77 nothing
// failed but some criterion was blocked on missing data.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "cli.h"
#include "json.hpp"
#include "slate/bench.h"
#include "slate/dataset_io.h"
#include "slate/evaluation.h"
#include "slate/synthetic.h"
#include "slate/taggers.h"
#include "support.h"

namespace slate {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

enum class Outcome { kPass, kFail, kBlocked };

struct Tally {
  int pass = 0, fail = 0, blocked = 0;

  void report(Outcome o, const std::string& name, const std::string& detail) {
    const char* tag = o == Outcome::kPass   ? "PASS"
                      : o == Outcome::kFail ? "FAIL"
                                            : "BLOCKED";
    std::cout << "[" << tag << "] " << name << ": " << detail << std::endl;
    (o == Outcome::kPass ? pass : o == Outcome::kFail ? fail : blocked)++;
  }
  void check(bool ok, const std::string& name, const std::string& detail) {
    report(ok ? Outcome::kPass : Outcome::kFail, name, detail);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::vector<SentenceSpan> tasks_only(const std::vector<SentenceSpan>& spans) {
  std::vector<SentenceSpan> out;
  for (const auto& s : spans)
    if (s.is_task()) out.push_back({s.start, s.end, SentenceLabel::kTask, false});
  return out;
}

std::vector<SentenceSpan> strip_context(std::vector<SentenceSpan> spans) {
  for (auto& s : spans) s.context = false;
  return spans;
}

// ---- core -----------------------------------------------------------------

void matching_oracle(Tally& t) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  int bad = 0;
  std::size_t matchings = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 14;
    auto gold = testing::random_partition(rng, n, 6);
    auto pred = i % 2 ? testing::random_overlapping_tasks(rng, n, 6)
                      : testing::random_disjoint_tasks(rng, n, 6);
    const auto m = full_matching(pred, gold);
    const auto o = testing::brute_force_matching(pred, gold);
    matchings += o.full_matchings;
    if (m.edges.size() != std::min(pred.size(), gold.size()) ||
        testing::exact_weight(m, pred, gold) != o.best_weight)
      ++bad;
  }
  const double secs = seconds_since(t0);
  t.check(bad == 0 && secs < 10.0, "Matching oracle",
          std::to_string(1000 - bad) + "/1000 exact (" +
              std::to_string(matchings) + " full matchings enumerated), " +
              fmt(secs) + " s");
}

void confusion_oracle(Tally& t) {
  using testing::span;
  constexpr auto kNon = SentenceLabel::kNonTask;
  struct Fixture {
    std::vector<SentenceSpan> pred, gold;
    ConfusionCounts want;
  };
  const std::vector<Fixture> fixtures = {
      {{span(3, 7)},
       {span(0, 3, kNon), span(3, 8), span(8, 10, kNon)},
       {1, 0, 2, 0}},
      {{span(0, 3), span(3, 6)}, {span(0, 6)}, {1, 1, 0, 0}},
      {{}, {span(0, 2), span(2, 4), span(4, 5, kNon)}, {0, 0, 1, 2}},
  };
  int ok = 0;
  for (const auto& f : fixtures) {
    const auto m = prune(full_matching(f.pred, f.gold), kDefaultMatchThreshold);
    ok += confusion(m, f.pred, f.gold) == f.want;
  }
  t.check(ok == 3, "Confusion oracle", std::to_string(ok) + "/3 fixtures exact");
}

void boundary_oracle(Tally& t) {
  std::mt19937_64 rng(20240602);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 16;
    auto pick = [&] {
      std::vector<std::size_t> p;
      const std::size_t k = rng() % 6;
      for (std::size_t j = 0; j < k; ++j) p.push_back(rng() % (n + 1));
      return make_boundary_set(p, n);
    };
    const auto a = pick(), b = pick();
    if (boundary_edit_distance(a, b).scaled_cost() !=
        testing::brute_force_bed(a, b, kDefaultTranspositionWindow).scaled_cost)
      ++bad;
  }
  const double b1 = boundary_similarity(make_boundary_set({0, 4, 9}, 9),
                                        make_boundary_set({0, 5, 9}, 9));
  const double b2 = boundary_similarity(make_boundary_set({0, 9}, 9),
                                        make_boundary_set({0, 5, 9}, 9));
  const bool fixtures = std::abs(b1 - 5.0 / 6.0) < 1e-12 &&
                        std::abs(b2 - 2.0 / 3.0) < 1e-12;
  t.check(bad == 0 && fixtures, "Boundary metric oracle",
          std::to_string(1000 - bad) + "/1000 BED costs exact; B = " +
              fmt(b1, 12) + ", " + fmt(b2, 12));
}

void token_fuzz(Tally& t) {
  std::mt19937_64 rng(20240603);
  int bad = 0;
  std::size_t tokens = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto r = testing::random_region(rng, 40, 10, "fuzz");
    const auto toks = render_with_layout(r, testing::random_splitter(rng()));
    tokens += toks.size();
    for (auto scheme : {LabelScheme::kSentenceBI, LabelScheme::kSlateBIO,
                        LabelScheme::kSlateNTI}) {
      const auto words = encode_word_labels(r, scheme);
      const auto tl = project_to_tokens(words, toks);
      if (aggregate_tokens(scheme, toks, tl, r.size()) != words) ++bad;
    }
  }
  t.check(bad == 0, "Codec round trip [token fuzz]",
          std::to_string(3000 - bad) + "/3000 region-scheme pairs over " +
              std::to_string(tokens) + " tokens (1-5 pieces per word)");
}

void perfect_predictions(Tally& t) {
  const fs::path dir = fs::temp_directory_path() /
                       ("slate_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto corpus = synthetic_corpus({60, 77, 0.05, "test"});
  save_corpus(corpus, dir / "gold.jsonl");
  std::ostringstream out, err;
  int rc = cli::run({"slate", "encode", "--corpus", (dir / "gold.jsonl").string(),
                     "--scheme", "nti", "--output",
                     (dir / "pred.jsonl").string()},
                    out, err);
  if (rc == 0)
    rc = cli::run({"slate", "eval", "--corpus", (dir / "gold.jsonl").string(),
                   "--predictions", (dir / "pred.jsonl").string()},
                  out, err);
  fs::remove_all(dir);
  if (rc != 0) {
    t.check(false, "Perfect-prediction end-to-end",
            "cli exited " + std::to_string(rc) + ": " + err.str());
    return;
  }
  const auto r = nlohmann::json::parse(out.str());
  const bool ok = r["task"]["f1"] == 1.0 && r["accuracy"] == 1.0 &&
                  r["b"] == 1.0 && r["b_tp"] == 1.0;
  t.check(ok, "Perfect-prediction end-to-end",
          "task F1 " + r["task"]["f1"].dump() + ", accuracy " +
              r["accuracy"].dump() + ", B " + r["b"].dump() + ", B_tp " +
              r["b_tp"].dump() + " over " + std::to_string(corpus.size()) +
              " regions");
}

// ---- latency --------------------------------------------------------------

constexpr std::size_t kSweepWords = 64;
const std::vector<std::size_t> kSweepK = {1, 2, 4, 8, 16, 32};

void latency_sweep(Tally& t) {
  // Models are fit on sweep-style regions so segmentation is exact and the
  // classifier call count equals k. Layout is off so the joint tagger sees
  // the same 64 tokens for every k.
  std::vector<WritingRegion> train, sweep;
  for (std::uint64_t s = 0; s < 10; ++s)
    for (auto k : kSweepK)
      train.push_back(synthetic_sweep_region(k, kSweepWords, 1000 + s, "train"));
  for (std::uint64_t s = 0; s < 50; ++s)  // k interleaved against drift
    for (auto k : kSweepK)
      sweep.push_back(synthetic_sweep_region(
          k, kSweepWords, s, "k" + std::to_string(k) + "-" + std::to_string(s)));
  TrainConfig cfg;
  cfg.use_layout = false;
  const auto joint = train_joint(train, LabelScheme::kSlateNTI, cfg);
  const auto seg = train_joint(train, LabelScheme::kSentenceBI, cfg);
  const auto cls = train_sentence_classifier(sentences_of(train), cfg);

  bool exact = true;
  for (const auto& r : sweep) {
    InvocationCounter c;
    extract_two_model(seg, cls, r, &c);
    exact = exact && c.classifier == r.gold_sentences.size();
  }
  t.check(exact, "Latency mechanism [two-model classifier invocations = k]",
          std::to_string(sweep.size()) + " sweep regions, k in {1..32}");

  const auto report = compare_latency(
      Extractor([&](const WritingRegion& r, InvocationCounter* c) {
        return extract_joint(joint, r, c);
      }),
      Extractor([&](const WritingRegion& r, InvocationCounter* c) {
        return extract_two_model(seg, cls, r, c);
      }),
      sweep, 5);

  std::string two_trace, joint_trace;
  bool increasing = true;
  double jmin = 1e300, jmax = 0.0, prev = -1.0;
  for (auto k : kSweepK) {
    const double tm = report.two_model->by_sentence_count.at(k).mean_ms;
    const double jm = report.joint->by_sentence_count.at(k).mean_ms;
    two_trace += (two_trace.empty() ? "" : " ") + std::to_string(k) + ":" + fmt(tm, 4);
    joint_trace += (joint_trace.empty() ? "" : " ") + std::to_string(k) + ":" + fmt(jm, 4);
    increasing = increasing && tm > prev;
    prev = tm;
    jmin = std::min(jmin, jm);
    jmax = std::max(jmax, jm);
  }
  t.check(increasing,
          "Latency mechanism [two-model mean latency strictly increasing in k]",
          "mean ms by k: " + two_trace);
  const double spread = (jmax - jmin) / jmin;
  t.check(spread < 0.5, "Latency mechanism [joint latency spread < 50%]",
          "spread " + fmt(100.0 * spread, 1) + "%, mean ms by k: " + joint_trace);
}

// ---- corpus ---------------------------------------------------------------

struct CorpusData {
  std::vector<WritingRegion> train, test;
  double load_seconds = 0.0;
};

std::optional<CorpusData> load_released(Tally& t) {
  const auto path = default_corpus_path();
  if (!path || !fs::exists(*path)) return std::nullopt;
  CorpusData d;
  const auto t0 = Clock::now();
  try {
    d.train = load_corpus(*path, "train");
    d.test = load_corpus(*path, "test");
  } catch (const DataError& e) {
    t.check(false, "Dataset sanity", e.what());
    return std::nullopt;
  }
  d.load_seconds = seconds_since(t0);
  return d;
}

void dataset_sanity(Tally& t, const CorpusData& d) {
  const auto tr = corpus_stats(d.train), te = corpus_stats(d.test);
  const bool ok = tr.sentences == 2496 && tr.tasks == 704 &&
                  tr.nontasks == 1522 && tr.context_tasks == 173 &&
                  tr.context_nontasks == 97 && te.sentences == 1416 &&
                  te.tasks == 440 && te.nontasks == 857 &&
                  te.context_tasks == 54 && te.context_nontasks == 65 &&
                  d.load_seconds < 5.0;
  auto row = [](const CorpusStats& s) {
    return std::to_string(s.sentences) + "/" + std::to_string(s.tasks) + "/" +
           std::to_string(s.nontasks) + "/" + std::to_string(s.context_tasks) +
           "/" + std::to_string(s.context_nontasks);
  };
  t.check(ok, "Dataset sanity",
          "train " + row(tr) + ", test " + row(te) +
              " (sentences/tasks/nontasks/ctx tasks/ctx nontasks), loaded in " +
              fmt(d.load_seconds) + " s");
}

void corpus_round_trip(Tally& t, const CorpusData& d) {
  std::size_t bad = 0, total = 0;
  for (const auto* part : {&d.train, &d.test})
    for (const auto& r : *part) {
      ++total;
      const auto gold = strip_context(r.gold_sentences);
      std::vector<SentenceSpan> bi;
      for (const auto& s : gold)
        bi.push_back({s.start, s.end, SentenceLabel::kUnlabeled, false});
      const bool ok =
          decode(encode_word_labels(r, LabelScheme::kSlateNTI)).spans == gold &&
          decode(encode_word_labels(r, LabelScheme::kSlateBIO)).spans ==
              tasks_only(gold) &&
          decode(encode_word_labels(r, LabelScheme::kSentenceBI)).spans == bi;
      bad += !ok;
    }
  t.check(bad == 0 && total > 0, "Codec round trip [released corpus]",
          std::to_string(total - bad) + "/" + std::to_string(total) +
              " regions, all three schemes");
}

void scheme_equivalence(Tally& t, const CorpusData& d) {
  std::size_t bad = 0, total = 0;
  for (const auto* part : {&d.train, &d.test})
    for (const auto& r : *part) {
      ++total;
      const auto nti = encode_word_labels(r, LabelScheme::kSlateNTI);
      bad += decode(nti_to_bio(nti)).spans != tasks_only(decode(nti).spans);
    }
  t.check(bad == 0 && total > 0, "Scheme equivalence",
          std::to_string(total - bad) + "/" + std::to_string(total) + " regions");
}

double f1_or_zero(const EvalReport& r) {
  return r.metrics.task.f1.value_or(0.0);
}

void perceptron_floor_and_ratio(Tally& t, const CorpusData& d) {
  const auto t0 = Clock::now();
  const TrainConfig cfg;
  const auto nti = train_joint(d.train, LabelScheme::kSlateNTI, cfg);
  PredictionMap pred, all_task, all_non;
  for (const auto& r : d.test) {
    pred[r.region_id] = {extract_joint(nti, r), true};
    auto spans = r.gold_sentences;
    for (auto& s : spans) s.label = SentenceLabel::kTask;
    all_task[r.region_id] = {spans, true};
    for (auto& s : spans) s.label = SentenceLabel::kNonTask;
    all_non[r.region_id] = {spans, true};
  }
  const double f1 = f1_or_zero(corpus_evaluate(d.test, pred));
  const double f1_task = f1_or_zero(corpus_evaluate(d.test, all_task));
  const double f1_non = f1_or_zero(corpus_evaluate(d.test, all_non));
  const double secs = seconds_since(t0);
  t.check(f1 > f1_task && f1 > f1_non && secs < 300.0, "Perceptron floor",
          "NTI task F1 " + fmt(f1, 4) + " vs all-task " + fmt(f1_task, 4) +
              " and all-non-task " + fmt(f1_non, 4) + ", " + fmt(secs, 1) +
              " s");

  const auto seg = train_joint(d.train, LabelScheme::kSentenceBI, cfg);
  const auto cls = train_sentence_classifier(sentences_of(d.train), cfg);
  const auto rep = compare_latency(
      Extractor([&](const WritingRegion& r, InvocationCounter* c) {
        return extract_joint(nti, r, c);
      }),
      Extractor([&](const WritingRegion& r, InvocationCounter* c) {
        return extract_two_model(seg, cls, r, c);
      }),
      d.test, 5);
  t.check(rep.ratio && *rep.ratio > 1.0,
          "Latency mechanism [two-model / joint ratio > 1 on test corpus]",
          "joint " + fmt(rep.joint->overall.mean_ms, 4) + " ms, two-model " +
              fmt(rep.two_model->overall.mean_ms, 4) + " ms, ratio " +
              (rep.ratio ? fmt(*rep.ratio) : "n/a"));
}

void corpus_group(Tally& t) {
  const auto data = load_released(t);
  if (!data) {
    const std::string why =
        "released corpus not found; set SLATE_DATA_DIR to a directory "
        "holding corpus.jsonl";
    for (const char* name :
         {"Dataset sanity", "Codec round trip [released corpus]",
          "Scheme equivalence", "Perceptron floor",
          "Latency mechanism [two-model / joint ratio > 1 on test corpus]"})
      t.report(Outcome::kBlocked, name, why);
    return;
  }
  dataset_sanity(t, *data);
  corpus_round_trip(t, *data);
  scheme_equivalence(t, *data);
  perceptron_floor_and_ratio(t, *data);
}

}  // namespace
}  // namespace slate

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: slate_acceptance [--only core|latency|corpus]\n";
      return 2;
    }
  }
  if (!only.empty() && only != "core" && only != "latency" && only != "corpus") {
    std::cerr << "unknown group '" << only << "'\n";
    return 2;
  }
  slate::Tally t;
  if (only.empty() || only == "core") {
    slate::matching_oracle(t);
    slate::confusion_oracle(t);
    slate::boundary_oracle(t);
    slate::token_fuzz(t);
    slate::perfect_predictions(t);
  }
  if (only.empty() || only == "latency") slate::latency_sweep(t);
  if (only.empty() || only == "corpus") slate::corpus_group(t);
  std::cout << t.pass << " passed, " << t.fail << " failed, " << t.blocked
            << " blocked" << std::endl;
  if (t.fail > 0) return 1;
  return t.blocked > 0 ? 77 : 0;
}
