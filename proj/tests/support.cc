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

#include "support.h"

#include <algorithm>
#include <functional>
#include <limits>

namespace slate::testing {

Rational exact_iou(const SentenceSpan& a, const SentenceSpan& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  const std::size_t inter = hi > lo ? hi - lo : 0;
  const std::size_t uni = a.size() + b.size() - inter;
  if (uni == 0) return Rational(0);
  return Rational(static_cast<long long>(inter), static_cast<long long>(uni));
}

MatchOracle brute_force_matching(const std::vector<SentenceSpan>& pred,
                                 const std::vector<SentenceSpan>& gold) {
  MatchOracle out;
  const std::size_t size = std::min(pred.size(), gold.size());
  std::vector<bool> used(gold.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool first = true;

  // Chooses, for pred index p in order, a gold partner or none, keeping
  // exactly `size` pairs in total.
  std::function<void(std::size_t, Rational)> go = [&](std::size_t p,
                                                      Rational w) {
    const std::size_t remaining = pred.size() - p;
    if (pairs.size() + remaining < size) return;
    if (p == pred.size()) {
      ++out.full_matchings;
      if (first || w > out.best_weight ||
          (w == out.best_weight && pairs < out.best_pairs)) {
        out.best_weight = w;
        out.best_pairs = pairs;
        first = false;
      }
      return;
    }
    if (pairs.size() < size) {
      for (std::size_t g = 0; g < gold.size(); ++g) {
        if (used[g]) continue;
        used[g] = true;
        pairs.emplace_back(p, g);
        go(p + 1, w + exact_iou(pred[p], gold[g]));
        pairs.pop_back();
        used[g] = false;
      }
    }
    go(p + 1, w);
  };
  go(0, Rational(0));
  return out;
}

Rational exact_weight(const MatchResult& m,
                      const std::vector<SentenceSpan>& pred,
                      const std::vector<SentenceSpan>& gold) {
  Rational w(0);
  for (const auto& e : m.edges)
    w += exact_iou(pred[e.pred_index], gold[e.gold_index]);
  return w;
}

BedOracle brute_force_bed(const BoundarySet& from, const BoundarySet& to,
                          int window) {
  const auto& a = from.positions;
  const auto& b = to.positions;
  BedOracle best{std::numeric_limits<long long>::max(), 0};
  std::vector<bool> used(b.size(), false);
  std::function<void(std::size_t, long long, std::size_t)> go =
      [&](std::size_t i, long long paired_cost, std::size_t pairs) {
        if (i == a.size()) {
          const auto unpaired =
              static_cast<long long>(a.size() + b.size() - 2 * pairs);
          const long long cost = paired_cost + unpaired * window;
          if (cost < best.scaled_cost ||
              (cost == best.scaled_cost && pairs < best.min_pairs))
            best = {cost, pairs};
          return;
        }
        go(i + 1, paired_cost, pairs);
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (used[j]) continue;
          const long long d = a[i] > b[j] ? static_cast<long long>(a[i] - b[j])
                                          : static_cast<long long>(b[j] - a[i]);
          if (d > window) continue;
          used[j] = true;
          go(i + 1, paired_cost + d, pairs + 1);
          used[j] = false;
        }
      };
  go(0, 0, 0);
  return best;
}

std::vector<SentenceSpan> random_partition(std::mt19937_64& rng, std::size_t n,
                                           std::size_t max_parts) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < n; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  const std::size_t parts =
      1 + rng() % std::min<std::size_t>(max_parts, n);
  cuts.resize(parts - 1);
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<SentenceSpan> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    out.push_back(span(cuts[i], cuts[i + 1],
                       rng() % 2 ? SentenceLabel::kTask
                                 : SentenceLabel::kNonTask,
                       rng() % 4 == 0));
  return out;
}

std::vector<SentenceSpan> random_disjoint_tasks(std::mt19937_64& rng,
                                                std::size_t n,
                                                std::size_t max_spans) {
  auto parts = random_partition(rng, n, max_spans);
  std::vector<SentenceSpan> out;
  for (auto& s : parts) {
    if (rng() % 3 == 0) continue;
    // Optionally shrink so predictions need not tile the region.
    if (s.size() > 1 && rng() % 3 == 0) {
      if (rng() % 2)
        ++s.start;
      else
        --s.end;
    }
    s.label = SentenceLabel::kTask;
    s.context = false;
    out.push_back(s);
  }
  return out;
}

std::vector<SentenceSpan> random_overlapping_tasks(std::mt19937_64& rng,
                                                   std::size_t n,
                                                   std::size_t max_spans) {
  std::vector<SentenceSpan> out;
  const std::size_t count = rng() % (max_spans + 1);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a > b) std::swap(a, b);
    out.push_back(span(a, b + 1));
  }
  return out;
}

WritingRegion random_region(std::mt19937_64& rng, std::size_t max_words,
                            std::size_t max_sentences, const std::string& id) {
  static const char* kLetters = "abcdefghijklmnopqrstuvwxyzABC0123";
  const std::size_t n = 1 + rng() % max_words;
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < n; ++i) {
    std::string w;
    const std::size_t len = 1 + rng() % 9;
    for (std::size_t c = 0; c < len; ++c) w.push_back(kLetters[rng() % 33]);
    texts.push_back(w);
  }
  LayoutMetadata layout;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng() % 4 == 0) layout.line_break_before.insert(i);
    if (rng() % 6 == 0) layout.bullet_before.insert(i);
  }
  auto region = make_region(id, texts, random_partition(rng, n, max_sentences),
                            layout);
  region.doc_id = "doc-" + id;
  region.split = rng() % 2 ? "train" : "test";
  return region;
}

SubwordSplitter random_splitter(std::uint64_t seed) {
  return [seed](std::string_view word) {
    std::mt19937_64 rng(seed ^ std::hash<std::string_view>{}(word));
    const std::size_t pieces =
        1 + rng() % std::min<std::size_t>(5, std::max<std::size_t>(1, word.size()));
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i < word.size(); ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(pieces - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::string> out;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
      out.emplace_back(word.substr(prev, c - prev));
      prev = c;
    }
    out.emplace_back(word.substr(prev));
    return out;
  };
}

SentenceSpan span(std::size_t start, std::size_t end, SentenceLabel label,
                  bool context) {
  SentenceSpan s;
  s.start = start;
  s.end = end;
  s.label = label;
  s.context = context;
  return s;
}

std::vector<Label> labels(std::string_view text) {
  std::vector<Label> out;
  for (char c : text) out.push_back(parse_label(std::string_view(&c, 1)));
  return out;
}

}  // namespace slate::testing
