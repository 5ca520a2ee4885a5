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

#include "slate/document.h"

#include <algorithm>

namespace slate {

std::string_view to_string(SentenceLabel label) {
  switch (label) {
    case SentenceLabel::kTask:
      return "task";
    case SentenceLabel::kNonTask:
      return "nontask";
    case SentenceLabel::kUnlabeled:
      return "none";
  }
  return "none";
}

SentenceLabel parse_sentence_label(std::string_view text) {
  if (text == "task") return SentenceLabel::kTask;
  if (text == "nontask") return SentenceLabel::kNonTask;
  if (text == "none") return SentenceLabel::kUnlabeled;
  throw DataError("unknown sentence label '" + std::string(text) + "'");
}

std::vector<SentenceSpan> WritingRegion::gold_tasks() const {
  std::vector<SentenceSpan> tasks;
  for (const auto& s : gold_sentences)
    if (s.is_task()) tasks.push_back(s);
  return tasks;
}

WritingRegion make_region(std::string region_id,
                          const std::vector<std::string>& texts,
                          std::vector<SentenceSpan> gold,
                          LayoutMetadata layout) {
  WritingRegion region;
  region.region_id = std::move(region_id);
  region.words.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i)
    region.words.push_back(Word{texts[i], i});
  region.gold_sentences = std::move(gold);
  region.layout = std::move(layout);
  return region;
}

std::vector<Violation> validate_region(const WritingRegion& region) {
  std::vector<Violation> out;
  const std::size_t n = region.words.size();
  if (n == 0) out.push_back({"empty region", 0});

  for (std::size_t i = 0; i < n; ++i) {
    if (region.words[i].index != i)
      out.push_back({"word index mismatch", i});
    if (region.words[i].text.empty()) out.push_back({"empty word text", i});
  }

  for (std::size_t i : region.layout.line_break_before)
    if (i >= n) out.push_back({"layout index out of range", i});
  for (std::size_t i : region.layout.bullet_before)
    if (i >= n) out.push_back({"layout index out of range", i});

  if (region.gold_sentences.empty()) return out;

  std::vector<SentenceSpan> spans = region.gold_sentences;
  std::sort(spans.begin(), spans.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  std::size_t covered = 0;
  for (const auto& s : spans) {
    if (s.start >= s.end) {
      out.push_back({"empty or reversed span", s.start});
      continue;
    }
    if (s.end > n) out.push_back({"span out of range", s.end});
    if (s.label == SentenceLabel::kUnlabeled)
      out.push_back({"gold span without task/nontask label", s.start});
    if (s.start < covered)
      out.push_back({"overlap at word " + std::to_string(s.start), s.start});
    else if (s.start > covered)
      out.push_back({"gap at word " + std::to_string(covered), covered});
    covered = std::max(covered, s.end);
  }
  if (covered < n)
    out.push_back({"gap at word " + std::to_string(covered), covered});
  return out;
}

bool spans_disjoint(const std::vector<SentenceSpan>& spans, std::size_t n) {
  std::vector<SentenceSpan> sorted = spans;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  std::size_t covered = 0;
  for (const auto& s : sorted) {
    if (s.start >= s.end || s.end > n || s.start < covered) return false;
    covered = s.end;
  }
  return true;
}

bool spans_partition(const std::vector<SentenceSpan>& spans, std::size_t n) {
  std::vector<SentenceSpan> sorted = spans;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  std::size_t covered = 0;
  for (const auto& s : sorted) {
    if (s.start != covered || s.end <= s.start) return false;
    covered = s.end;
  }
  return covered == n;
}

}  // namespace slate
