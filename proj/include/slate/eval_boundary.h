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

#ifndef SLATE_EVAL_BOUNDARY_H_
#define SLATE_EVAL_BOUNDARY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "slate/document.h"

namespace slate {

struct MatchResult;

inline constexpr int kDefaultTranspositionWindow = 2;

// Boundary positions between words, 0..n; position k sits before word k.
// 0 and n are always members.
struct BoundarySet {
  std::vector<std::size_t> positions;  // sorted, unique
  std::size_t word_count = 0;

  friend bool operator==(const BoundarySet&, const BoundarySet&) = default;
};

BoundarySet make_boundary_set(std::vector<std::size_t> positions,
                              std::size_t word_count);

// Boundaries of disjoint spans plus the two default boundaries.
BoundarySet boundaries_of(const std::vector<SentenceSpan>& spans,
                          std::size_t word_count);

struct EditSummary {
  std::size_t matches = 0;    // N_M
  std::size_t additions = 0;  // N_A
  std::size_t deletions = 0;  // N_D
  std::vector<int> transpositions;  // shift distances, each in [1, window]
  int window = kDefaultTranspositionWindow;

  // Edit-cost numerator scaled by the window: window*(A + D) + sum(t).
  long long scaled_cost() const;
  double cost() const;
  std::size_t operation_count() const;
};

// Minimum-cost monotone alignment of `from` onto `to`. Among alignments of
// equal cost the one with the most operations (fewest pairings) wins.
EditSummary boundary_edit_distance(const BoundarySet& from,
                                   const BoundarySet& to,
                                   int window = kDefaultTranspositionWindow);

double boundary_similarity(const EditSummary& edits);
double boundary_similarity(const BoundarySet& a, const BoundarySet& b,
                           int window = kDefaultTranspositionWindow);

// Boundary similarity restricted to true-positive task spans and their
// matched gold spans. Empty when there are no true positives.
std::optional<double> b_tp(const MatchResult& match,
                           const std::vector<SentenceSpan>& predicted_tasks,
                           const std::vector<SentenceSpan>& gold,
                           std::size_t word_count,
                           int window = kDefaultTranspositionWindow);

}  // namespace slate

#endif  // SLATE_EVAL_BOUNDARY_H_
