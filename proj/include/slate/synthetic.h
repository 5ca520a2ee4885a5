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

#ifndef SLATE_SYNTHETIC_H_
#define SLATE_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "slate/document.h"

namespace slate {

// Ink-like annotated regions (to-do lists, recipes, free notes) with line
// breaks, bullets, lowercase unpunctuated text and recognition typos. Used
// for demos and tests when the released corpus is not at hand.
struct SyntheticOptions {
  std::size_t documents = 40;
  std::uint64_t seed = 1;
  double typo_rate = 0.05;
  std::string split = "train";
};

std::vector<WritingRegion> synthetic_corpus(const SyntheticOptions& options);

// One region with `sentences` sentences spread over `total_words` words,
// one sentence per line, alternating task and non-task. Each sentence opens
// with "todo" or "note", so boundaries are recoverable without layout.
WritingRegion synthetic_sweep_region(std::size_t sentences,
                                     std::size_t total_words,
                                     std::uint64_t seed,
                                     const std::string& region_id);

}  // namespace slate

#endif  // SLATE_SYNTHETIC_H_
