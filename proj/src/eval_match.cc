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

#include "slate/eval_match.h"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "slate/assignment.h"

namespace slate {
namespace {

using BigInt = boost::multiprecision::cpp_int;

Metric ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

Metric harmonic_mean(Metric p, Metric r) {
  if (!p || !r) return std::nullopt;
  if (*p + *r == 0.0) return 0.0;
  return 2.0 * *p * *r / (*p + *r);
}

BigInt gcd_big(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt pow_int(std::size_t base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

Overlap overlap(const SentenceSpan& a, const SentenceSpan& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  const std::size_t inter = hi > lo ? hi - lo : 0;
  return {inter, a.size() + b.size() - inter};
}

double iou(const SentenceSpan& pred, const SentenceSpan& gold) {
  return overlap(pred, gold).ratio();
}

double MatchResult::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

MatchResult full_matching(const std::vector<SentenceSpan>& predicted_tasks,
                          const std::vector<SentenceSpan>& gold) {
  const std::size_t p = predicted_tasks.size();
  const std::size_t g = gold.size();
  MatchResult result;
  for (std::size_t i = 0; i < p; ++i) result.unmatched_pred.insert(i);
  for (std::size_t j = 0; j < g; ++j) result.unmatched_gold.insert(j);
  if (p == 0 || g == 0) return result;

  std::vector<std::vector<Overlap>> ov(p, std::vector<Overlap>(g));
  BigInt lcm = 1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      ov[i][j] = overlap(predicted_tasks[i], gold[j]);
      const BigInt u = std::max<std::size_t>(ov[i][j].union_size, 1);
      lcm = lcm / gcd_big(lcm, u) * u;
    }

  // Exact integer weights: IOU scaled by the lcm of union sizes, shifted
  // above a tie-break bonus. Read in pred order, the sorted pair list is
  // decided by the first pred whose state differs: matched beats unmatched,
  // a lower gold index beats a higher one. Each pred is one base-(g+1)
  // digit worth g - j when matched to j and 0 when unmatched, so the largest
  // bonus is the lexicographically smallest list.
  const BigInt scale = pow_int(g + 1, p);
  std::vector<std::vector<BigInt>> weight(p, std::vector<BigInt>(g));
  for (std::size_t i = 0; i < p; ++i) {
    const BigInt place = pow_int(g + 1, p - 1 - i);
    for (std::size_t j = 0; j < g; ++j) {
      const BigInt base =
          BigInt(ov[i][j].intersection) *
          (lcm / BigInt(std::max<std::size_t>(ov[i][j].union_size, 1)));
      weight[i][j] = base * scale + BigInt(g - j) * place;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (p <= g) {
    std::vector<std::vector<BigInt>> cost(p, std::vector<BigInt>(g));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < g; ++j) cost[i][j] = -weight[i][j];
    auto col = solve_min_assignment(cost);
    for (std::size_t i = 0; i < p; ++i) pairs.emplace_back(i, col[i]);
  } else {
    std::vector<std::vector<BigInt>> cost(g, std::vector<BigInt>(p));
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t i = 0; i < p; ++i) cost[j][i] = -weight[i][j];
    auto col = solve_min_assignment(cost);
    for (std::size_t j = 0; j < g; ++j) pairs.emplace_back(col[j], j);
  }
  std::sort(pairs.begin(), pairs.end());

  for (auto [i, j] : pairs) {
    result.edges.push_back({i, j, ov[i][j].ratio(), ov[i][j]});
    result.unmatched_pred.erase(i);
    result.unmatched_gold.erase(j);
  }
  return result;
}

MatchResult prune(const MatchResult& match, double threshold) {
  MatchResult out;
  out.unmatched_pred = match.unmatched_pred;
  out.unmatched_gold = match.unmatched_gold;
  out.threshold = threshold;
  for (const auto& e : match.edges) {
    if (e.weight < threshold) {
      out.unmatched_pred.insert(e.pred_index);
      out.unmatched_gold.insert(e.gold_index);
    } else {
      out.edges.push_back(e);
    }
  }
  return out;
}

ConfusionCounts confusion(const MatchResult& pruned,
                          const std::vector<SentenceSpan>& predicted_tasks,
                          const std::vector<SentenceSpan>& gold) {
  ConfusionCounts c;
  std::vector<bool> gold_matched(gold.size(), false);
  for (const auto& e : pruned.edges) {
    gold_matched.at(e.gold_index) = true;
    if (gold[e.gold_index].is_task())
      ++c.tp;
    else
      ++c.fp;
  }
  c.fp += predicted_tasks.size() - pruned.edges.size();
  for (std::size_t j = 0; j < gold.size(); ++j) {
    if (gold_matched[j]) continue;
    if (gold[j].is_task())
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

ContextCounts context_counts(const MatchResult& pruned,
                             const std::vector<SentenceSpan>& gold) {
  ContextCounts c;
  std::vector<bool> gold_matched(gold.size(), false);
  for (const auto& e : pruned.edges) gold_matched.at(e.gold_index) = true;
  for (std::size_t j = 0; j < gold.size(); ++j) {
    if (!gold[j].context) continue;
    if (gold[j].is_task()) {
      ++c.task_total;
      if (gold_matched[j]) ++c.task_hit;
    } else {
      ++c.nontask_total;
      if (!gold_matched[j]) ++c.nontask_hit;
    }
  }
  return c;
}

ClassificationReport classification_report(const ConfusionCounts& c,
                                           const ContextCounts& context) {
  ClassificationReport r;
  r.task.precision = ratio(c.tp, c.tp + c.fp);
  r.task.recall = ratio(c.tp, c.tp + c.fn);
  r.task.f1 = harmonic_mean(r.task.precision, r.task.recall);
  r.task.context_recall = ratio(context.task_hit, context.task_total);
  // Non-task view: positives and negatives trade places.
  r.nontask.precision = ratio(c.tn, c.tn + c.fn);
  r.nontask.recall = ratio(c.tn, c.tn + c.fp);
  r.nontask.f1 = harmonic_mean(r.nontask.precision, r.nontask.recall);
  r.nontask.context_recall = ratio(context.nontask_hit, context.nontask_total);
  r.accuracy = ratio(c.tp + c.tn, c.tp + c.fp + c.tn + c.fn);
  return r;
}

ClassificationReport classification_report(
    const ConfusionCounts& counts, const MatchResult& pruned,
    const std::vector<SentenceSpan>& gold) {
  return classification_report(counts, context_counts(pruned, gold));
}

}  // namespace slate
