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

#ifndef SLATE_TESTS_SUPPORT_H_
#define SLATE_TESTS_SUPPORT_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slate/document.h"
#include "slate/eval_boundary.h"
#include "slate/eval_match.h"
#include "slate/label_codec.h"

namespace slate::testing {

using Rational = boost::multiprecision::cpp_rational;

// Exact IOU of two spans.
Rational exact_iou(const SentenceSpan& a, const SentenceSpan& b);

// Every maximum-weight full matching, by enumeration. `best_pairs` is the
// lexicographically smallest sorted (pred, gold) list among the maxima.
struct MatchOracle {
  Rational best_weight;
  std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
  std::size_t full_matchings = 0;
};
MatchOracle brute_force_matching(const std::vector<SentenceSpan>& pred,
                                 const std::vector<SentenceSpan>& gold);

Rational exact_weight(const MatchResult& m,
                      const std::vector<SentenceSpan>& pred,
                      const std::vector<SentenceSpan>& gold);

// Minimum window-scaled BED cost over every legal pairing (crossings
// allowed), and the fewest pairings achieving it.
struct BedOracle {
  long long scaled_cost = 0;
  std::size_t min_pairs = 0;
};
BedOracle brute_force_bed(const BoundarySet& from, const BoundarySet& to,
                          int window);

// Random partition of [0, n) into at most `max_parts` spans with random
// labels and context flags.
std::vector<SentenceSpan> random_partition(std::mt19937_64& rng, std::size_t n,
                                           std::size_t max_parts);

// Up to `max_spans` disjoint spans inside [0, n), all tasks.
std::vector<SentenceSpan> random_disjoint_tasks(std::mt19937_64& rng,
                                                std::size_t n,
                                                std::size_t max_spans);

// Up to `max_spans` arbitrary (possibly overlapping) task spans.
std::vector<SentenceSpan> random_overlapping_tasks(std::mt19937_64& rng,
                                                   std::size_t n,
                                                   std::size_t max_spans);

// Annotated region with random words, layout and gold partition.
WritingRegion random_region(std::mt19937_64& rng, std::size_t max_words,
                            std::size_t max_sentences, const std::string& id);

// Splits each word into 1..5 non-empty pieces, chosen deterministically from
// the word text and `seed`.
SubwordSplitter random_splitter(std::uint64_t seed);

SentenceSpan span(std::size_t start, std::size_t end,
                  SentenceLabel label = SentenceLabel::kTask,
                  bool context = false);

std::vector<Label> labels(std::string_view text);  // "TINI" -> [T,I,N,I]

}  // namespace slate::testing

#endif  // SLATE_TESTS_SUPPORT_H_
