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

#include "slate/synthetic.h"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <string_view>
#include <tuple>

namespace slate {
namespace {

constexpr std::array<std::string_view, 18> kVerbs = {
    "buy",    "call",  "email",  "send",    "schedule", "book",
    "finish", "review", "submit", "pay",    "clean",    "fix",
    "order",  "prepare", "update", "confirm", "return",  "pick up"};
constexpr std::array<std::string_view, 20> kObjects = {
    "milk",        "mom",         "the report",   "john",
    "doc results", "flights",     "dentist appt", "rent",
    "the slides",  "invoice",     "car insurance", "the garage",
    "sink",        "team lunch",  "budget sheet", "library books",
    "hotel room",  "tax forms",   "gift for sara", "project plan"};
constexpr std::array<std::string_view, 8> kTails = {
    "by friday", "tomorrow", "asap", "before noon",
    "this week", "after work", "on monday", "for q3"};
constexpr std::array<std::string_view, 6> kTaskLeads = {
    "need to", "remember to", "dont forget to", "must", "todo", "have to"};
constexpr std::array<std::string_view, 8> kHeadings = {
    "to do",  "groceries", "this week", "monday",
    "errands", "work stuff", "weekend", "tasks"};
constexpr std::array<std::string_view, 12> kRemarks = {
    "results look great",          "meeting went well today",
    "the weather was nice",        "sales are up ten percent",
    "new office opens in june",    "kids loved the museum",
    "budget is on track",          "ideas for the party",
    "customers like the new logo", "q2 numbers were strong",
    "the demo crashed twice",      "great job everyone"};
constexpr std::array<std::string_view, 6> kDishes = {
    "pasta", "banana bread", "chili", "pancakes", "curry", "salad"};
constexpr std::array<std::string_view, 8> kIngredients = {
    "2 cups flour", "3 eggs",      "1 tsp salt",     "olive oil",
    "4 tomatoes",   "garlic",      "1 cup sugar",    "fresh basil"};
constexpr std::array<std::string_view, 8> kSteps = {
    "add tomato and garlic to make sauce", "mix flour and eggs",
    "bake for 30 min",                     "stir in the sugar",
    "boil water and add salt",             "chop the basil",
    "let it cool before serving",          "fry onions until golden"};
constexpr std::array<std::string_view, 8> kSweepWords = {
    "call", "mom", "about", "plans", "results", "great", "the", "report"};
constexpr std::array<std::string_view, 2> kSweepLeads = {"todo", "note"};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : rng_() % n; }
  bool chance(double p) {
    return static_cast<double>(rng_() % 1000000) < p * 1000000.0;
  }
  template <typename Array>
  std::string_view pick(const Array& a) {
    return a[below(a.size())];
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

struct Line {
  std::vector<std::string> words;
  bool bullet = false;
};

// Builds a region from sentences, each given as one or more lines.
class RegionBuilder {
 public:
  void add(const std::vector<Line>& lines, SentenceLabel label, bool context) {
    SentenceSpan span;
    span.start = region_.words.size();
    span.label = label;
    span.context = context;
    for (const auto& line : lines) {
      const std::size_t at = region_.words.size();
      if (at > 0) region_.layout.line_break_before.insert(at);
      if (line.bullet) region_.layout.bullet_before.insert(at);
      for (const auto& w : line.words)
        region_.words.push_back(Word{w, region_.words.size()});
    }
    span.end = region_.words.size();
    if (span.end > span.start) region_.gold_sentences.push_back(span);
  }

  // Sentences written as running text, wrapped every few words.
  void add_paragraph(
      const std::vector<std::tuple<std::vector<std::string>, SentenceLabel,
                                   bool>>& sentences,
      Generator& gen) {
    std::size_t until_wrap = 3 + gen.below(5);
    bool first = true;
    for (const auto& [words, label, context] : sentences) {
      SentenceSpan span;
      span.start = region_.words.size();
      span.label = label;
      span.context = context;
      for (const auto& w : words) {
        const std::size_t at = region_.words.size();
        if (!first && until_wrap == 0) {
          region_.layout.line_break_before.insert(at);
          until_wrap = 3 + gen.below(5);
        }
        if (first && at > 0) region_.layout.line_break_before.insert(at);
        first = false;
        region_.words.push_back(Word{w, at});
        --until_wrap;
      }
      span.end = region_.words.size();
      region_.gold_sentences.push_back(span);
    }
  }

  WritingRegion take() { return std::move(region_); }

 private:
  WritingRegion region_;
};

std::vector<std::string> task_words(Generator& gen, bool with_lead) {
  std::string text;
  if (with_lead) text = std::string(gen.pick(kTaskLeads)) + " ";
  text += std::string(gen.pick(kVerbs)) + " " + std::string(gen.pick(kObjects));
  if (gen.chance(0.4)) text += " " + std::string(gen.pick(kTails));
  return split_words(text);
}

std::vector<Line> wrap(std::vector<std::string> words, bool bullet,
                       Generator& gen) {
  if (words.size() >= 4 && gen.chance(0.3)) {
    const std::size_t cut = 2 + gen.below(words.size() - 2);
    Line a{{words.begin(), words.begin() + cut}, bullet};
    Line b{{words.begin() + cut, words.end()}, false};
    return {a, b};
  }
  return {Line{std::move(words), bullet}};
}

WritingRegion todo_region(Generator& gen) {
  RegionBuilder b;
  if (gen.chance(0.7))
    b.add({Line{split_words(gen.pick(kHeadings)), false}},
          SentenceLabel::kNonTask, false);
  const std::size_t items = 3 + gen.below(6);
  const bool bullets = gen.chance(0.8);
  for (std::size_t i = 0; i < items; ++i) {
    if (gen.chance(0.15)) {
      b.add(wrap(split_words(gen.pick(kRemarks)), bullets, gen),
            SentenceLabel::kNonTask, false);
    } else if (gen.chance(0.2)) {
      // Bare keyword; only a task because it sits in a to-do list.
      b.add({Line{split_words(gen.pick(kObjects)), bullets}},
            SentenceLabel::kTask, true);
    } else {
      b.add(wrap(task_words(gen, false), bullets, gen), SentenceLabel::kTask,
            false);
    }
  }
  return b.take();
}

WritingRegion recipe_region(Generator& gen) {
  RegionBuilder b;
  b.add({Line{split_words(std::string(gen.pick(kDishes)) + " recipe"), false}},
        SentenceLabel::kNonTask, false);
  const std::size_t ingredients = 2 + gen.below(4);
  for (std::size_t i = 0; i < ingredients; ++i)
    b.add({Line{split_words(gen.pick(kIngredients)), true}},
          SentenceLabel::kNonTask, false);
  const std::size_t steps = 2 + gen.below(4);
  for (std::size_t i = 0; i < steps; ++i)
    // Imperative, but instructions in a recipe are not tasks.
    b.add(wrap(split_words(gen.pick(kSteps)), false, gen),
          SentenceLabel::kNonTask, true);
  return b.take();
}

WritingRegion notes_region(Generator& gen) {
  RegionBuilder b;
  std::vector<std::tuple<std::vector<std::string>, SentenceLabel, bool>> s;
  const std::size_t count = 3 + gen.below(6);
  for (std::size_t i = 0; i < count; ++i) {
    if (gen.chance(0.4))
      s.emplace_back(task_words(gen, true), SentenceLabel::kTask, false);
    else
      s.emplace_back(split_words(gen.pick(kRemarks)), SentenceLabel::kNonTask,
                     false);
  }
  b.add_paragraph(s, gen);
  return b.take();
}

void add_typos(WritingRegion& region, double rate, Generator& gen) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  for (auto& w : region.words) {
    if (w.text.size() < 3 || !gen.chance(rate)) continue;
    w.text[gen.below(w.text.size())] = kLetters[gen.below(kLetters.size())];
  }
}

}  // namespace

std::vector<WritingRegion> synthetic_corpus(const SyntheticOptions& options) {
  Generator gen(options.seed);
  std::vector<WritingRegion> out;
  for (std::size_t d = 0; d < options.documents; ++d) {
    const std::string doc_id =
        options.split + "-doc" + std::to_string(d);
    const std::size_t regions = 1 + gen.below(3);
    for (std::size_t r = 0; r < regions; ++r) {
      WritingRegion region;
      switch (gen.below(3)) {
        case 0:
          region = todo_region(gen);
          break;
        case 1:
          region = recipe_region(gen);
          break;
        default:
          region = notes_region(gen);
          break;
      }
      add_typos(region, options.typo_rate, gen);
      region.doc_id = doc_id;
      region.region_id = doc_id + "-r" + std::to_string(r);
      region.split = options.split;
      out.push_back(std::move(region));
    }
  }
  return out;
}

WritingRegion synthetic_sweep_region(std::size_t sentences,
                                     std::size_t total_words,
                                     std::uint64_t seed,
                                     const std::string& region_id) {
  Generator gen(seed);
  sentences = std::clamp<std::size_t>(sentences, 1, total_words);
  RegionBuilder b;
  for (std::size_t k = 0; k < sentences; ++k) {
    const std::size_t len =
        total_words / sentences + (k < total_words % sentences ? 1 : 0);
    const bool task = k % 2 == 0;
    Line line{{std::string(kSweepLeads[task ? 0 : 1])}, true};
    for (std::size_t i = 1; i < len; ++i)
      line.words.emplace_back(gen.pick(kSweepWords));
    b.add({line}, task ? SentenceLabel::kTask : SentenceLabel::kNonTask,
          false);
  }
  auto region = b.take();
  region.region_id = region_id;
  region.doc_id = region_id;
  region.split = "synthetic";
  return region;
}

}  // namespace slate
