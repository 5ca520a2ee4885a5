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

#ifndef SLATE_DOCUMENT_H_
#define SLATE_DOCUMENT_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slate {

// Raised for malformed input data (bad records, invariant violations).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SentenceLabel { kNonTask, kTask, kUnlabeled };

std::string_view to_string(SentenceLabel label);
SentenceLabel parse_sentence_label(std::string_view text);

// A recognized word occurrence. Two words with equal text but different
// indices are distinct.
struct Word {
  std::string text;
  std::size_t index = 0;

  friend bool operator==(const Word&, const Word&) = default;
};

struct LayoutMetadata {
  std::set<std::size_t> line_break_before;
  std::set<std::size_t> bullet_before;

  friend bool operator==(const LayoutMetadata&, const LayoutMetadata&) = default;
};

// Half-open word range [start, end).
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  SentenceLabel label = SentenceLabel::kNonTask;
  bool context = false;

  std::size_t size() const { return end - start; }
  bool is_task() const { return label == SentenceLabel::kTask; }

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

struct WritingRegion {
  std::string region_id;
  std::string doc_id;
  std::string split;
  std::vector<Word> words;
  LayoutMetadata layout;
  std::vector<SentenceSpan> gold_sentences;

  std::size_t size() const { return words.size(); }
  std::vector<SentenceSpan> gold_tasks() const;

  friend bool operator==(const WritingRegion&, const WritingRegion&) = default;
};

// Builds a region from plain word texts; indices are assigned in order.
WritingRegion make_region(std::string region_id,
                          const std::vector<std::string>& texts,
                          std::vector<SentenceSpan> gold = {},
                          LayoutMetadata layout = {});

struct Violation {
  std::string message;
  std::size_t position = 0;
};

// Every invariant violation of `region`; empty means the region is valid.
std::vector<Violation> validate_region(const WritingRegion& region);

// True when `spans` are pairwise disjoint, non-empty and inside [0, n).
bool spans_disjoint(const std::vector<SentenceSpan>& spans, std::size_t n);

// True when `spans` cover [0, n) exactly with no gaps or overlaps.
bool spans_partition(const std::vector<SentenceSpan>& spans, std::size_t n);

}  // namespace slate

#endif  // SLATE_DOCUMENT_H_
