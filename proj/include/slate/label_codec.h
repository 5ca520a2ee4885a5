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

#ifndef SLATE_LABEL_CODEC_H_
#define SLATE_LABEL_CODEC_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slate/document.h"

namespace slate {

enum class LabelScheme { kSentenceBI, kSlateBIO, kSlateNTI };

enum class Label { B, I, O, N, T };

std::string_view to_string(LabelScheme scheme);
std::string_view to_string(Label label);
// Accepts "bi", "bio", "nti" (case-insensitive).
LabelScheme parse_scheme(std::string_view text);
Label parse_label(std::string_view text);

// Label alphabet of a scheme, in a fixed order used for model state indices.
std::span<const Label> alphabet(LabelScheme scheme);
bool in_alphabet(LabelScheme scheme, Label label);
// Position of `label` within alphabet(scheme); throws if absent.
std::size_t label_index(LabelScheme scheme, Label label);

// True for the labels that open a span (B under BI/BIO, N or T under NTI).
bool is_beginning(LabelScheme scheme, Label label);
// The label a non-first piece or a trailing marker continues with.
Label continuation_label(LabelScheme scheme);
// Whether `next` may follow `prev` in a well-formed word sequence. A missing
// `prev` means region start.
bool transition_allowed(LabelScheme scheme, std::optional<Label> prev,
                        Label next);

struct LabelSequence {
  LabelScheme scheme = LabelScheme::kSlateNTI;
  std::vector<Label> labels;

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

inline constexpr std::string_view kLineBreakMarker = "</>";
inline constexpr std::string_view kBulletMarker = "<.>";

enum class TokenKind { kWordPiece, kLineBreak, kBullet };

struct RenderedToken {
  std::string text;
  TokenKind kind = TokenKind::kWordPiece;
  std::optional<std::size_t> word_index;

  bool is_marker() const { return kind != TokenKind::kWordPiece; }
  friend bool operator==(const RenderedToken&, const RenderedToken&) = default;
};

using SubwordSplitter = std::function<std::vector<std::string>(std::string_view)>;

SubwordSplitter identity_splitter();
// Fixed-length character chunks, `max_chars` per piece.
SubwordSplitter chunk_splitter(std::size_t max_chars = 6);

// Renders words [begin, end) of `region`, inserting a bullet marker and then
// a line-break marker before each word that carries them.
std::vector<RenderedToken> render_range(const WritingRegion& region,
                                        std::size_t begin, std::size_t end,
                                        const SubwordSplitter& splitter,
                                        bool with_layout = true);

std::vector<RenderedToken> render_with_layout(const WritingRegion& region,
                                              const SubwordSplitter& splitter);

LabelSequence encode_word_labels(const WritingRegion& region,
                                 LabelScheme scheme);

// Word labels of an arbitrary span list under `scheme`. Spans must be disjoint
// and sorted; words outside every span are outside (O) under BIO.
LabelSequence encode_spans(const std::vector<SentenceSpan>& spans,
                           std::size_t word_count, LabelScheme scheme);

// Gives each token the training label implied by its word's label.
std::vector<Label> project_to_tokens(const LabelSequence& word_labels,
                                     std::span<const RenderedToken> tokens);

// Token-to-word reductions (one word's token labels in, one label out).
Label aggregate_bi(std::span<const Label> token_labels);
Label aggregate_bio(std::span<const Label> token_labels);
Label aggregate_nti(std::span<const Label> token_labels);
Label aggregate(LabelScheme scheme, std::span<const Label> token_labels);

// Groups token labels by word (markers dropped) and aggregates each group.
LabelSequence aggregate_tokens(LabelScheme scheme,
                               std::span<const RenderedToken> tokens,
                               std::span<const Label> token_labels,
                               std::size_t word_count);

struct DecodeResult {
  std::vector<SentenceSpan> spans;
  std::vector<std::string> repairs;
};

DecodeResult decode(const LabelSequence& word_labels);

// NTI -> BIO: task runs keep their shape, non-task runs become O.
LabelSequence nti_to_bio(const LabelSequence& nti);

}  // namespace slate

#endif  // SLATE_LABEL_CODEC_H_
