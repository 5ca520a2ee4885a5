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

#include "slate/eval_boundary.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "slate/eval_match.h"

namespace slate {
namespace {

struct Cell {
  long long cost = std::numeric_limits<long long>::max();
  long long ops = 0;
  enum class Move : unsigned char { kNone, kPair, kDelete, kAdd } move =
      Move::kNone;
};

// Lower cost first, then more operations.
bool better(long long cost, long long ops, const Cell& cell) {
  if (cost != cell.cost) return cost < cell.cost;
  return ops > cell.ops;
}

}  // namespace

long long EditSummary::scaled_cost() const {
  long long sum = static_cast<long long>(window) *
                  static_cast<long long>(additions + deletions);
  for (int t : transpositions) sum += t;
  return sum;
}

double EditSummary::cost() const {
  return static_cast<double>(scaled_cost()) / static_cast<double>(window);
}

std::size_t EditSummary::operation_count() const {
  return matches + additions + deletions + transpositions.size();
}

BoundarySet make_boundary_set(std::vector<std::size_t> positions,
                              std::size_t word_count) {
  positions.push_back(0);
  positions.push_back(word_count);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  if (positions.back() > word_count)
    throw std::invalid_argument("boundary position beyond word count");
  return BoundarySet{std::move(positions), word_count};
}

BoundarySet boundaries_of(const std::vector<SentenceSpan>& spans,
                          std::size_t word_count) {
  if (!spans_disjoint(spans, word_count))
    throw DataError("boundaries_of: spans overlap or fall outside the region");
  std::vector<std::size_t> positions;
  positions.reserve(2 * spans.size());
  for (const auto& s : spans) {
    positions.push_back(s.start);
    positions.push_back(s.end);
  }
  return make_boundary_set(std::move(positions), word_count);
}

EditSummary boundary_edit_distance(const BoundarySet& from,
                                   const BoundarySet& to, int window) {
  if (from.word_count != to.word_count)
    throw std::invalid_argument(
        "boundary sets describe texts of different length");
  if (window < 1) throw std::invalid_argument("transposition window < 1");

  const auto& a = from.positions;
  const auto& b = to.positions;
  const std::size_t rows = a.size() + 1, cols = b.size() + 1;
  std::vector<Cell> dp(rows * cols);
  auto at = [&](std::size_t i, std::size_t j) -> Cell& {
    return dp[i * cols + j];
  };
  at(0, 0).cost = 0;

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Cell cur = at(i, j);
      if (cur.cost == std::numeric_limits<long long>::max()) continue;
      if (i < a.size() && j < b.size()) {
        const auto d = static_cast<long long>(a[i] > b[j] ? a[i] - b[j]
                                                          : b[j] - a[i]);
        if (d <= window) {
          Cell& next = at(i + 1, j + 1);
          if (better(cur.cost + d, cur.ops + 1, next))
            next = {cur.cost + d, cur.ops + 1, Cell::Move::kPair};
        }
      }
      if (i < a.size()) {
        Cell& next = at(i + 1, j);
        if (better(cur.cost + window, cur.ops + 1, next))
          next = {cur.cost + window, cur.ops + 1, Cell::Move::kDelete};
      }
      if (j < b.size()) {
        Cell& next = at(i, j + 1);
        if (better(cur.cost + window, cur.ops + 1, next))
          next = {cur.cost + window, cur.ops + 1, Cell::Move::kAdd};
      }
    }
  }

  EditSummary out;
  out.window = window;
  std::size_t i = a.size(), j = b.size();
  while (i > 0 || j > 0) {
    switch (at(i, j).move) {
      case Cell::Move::kPair:
        --i;
        --j;
        if (a[i] == b[j])
          ++out.matches;
        else
          out.transpositions.push_back(
              static_cast<int>(a[i] > b[j] ? a[i] - b[j] : b[j] - a[i]));
        break;
      case Cell::Move::kDelete:
        --i;
        ++out.deletions;
        break;
      case Cell::Move::kAdd:
        --j;
        ++out.additions;
        break;
      case Cell::Move::kNone:
        throw std::logic_error("boundary alignment backtrack failed");
    }
  }
  std::reverse(out.transpositions.begin(), out.transpositions.end());
  return out;
}

double boundary_similarity(const EditSummary& edits) {
  const auto denom = edits.operation_count();
  if (denom == 0) return 1.0;
  return 1.0 - edits.cost() / static_cast<double>(denom);
}

double boundary_similarity(const BoundarySet& a, const BoundarySet& b,
                           int window) {
  return boundary_similarity(boundary_edit_distance(a, b, window));
}

std::optional<double> b_tp(const MatchResult& match,
                           const std::vector<SentenceSpan>& predicted_tasks,
                           const std::vector<SentenceSpan>& gold,
                           std::size_t word_count, int window) {
  std::vector<SentenceSpan> pred_tp, gold_tp;
  for (const auto& e : match.edges) {
    if (!gold.at(e.gold_index).is_task()) continue;
    pred_tp.push_back(predicted_tasks.at(e.pred_index));
    gold_tp.push_back(gold.at(e.gold_index));
  }
  if (pred_tp.empty()) return std::nullopt;
  return boundary_similarity(boundaries_of(pred_tp, word_count),
                             boundaries_of(gold_tp, word_count), window);
}

}  // namespace slate
