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

#include "slate/label_codec.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace slate {
namespace {

constexpr std::array<Label, 2> kBiAlphabet = {Label::B, Label::I};
constexpr std::array<Label, 3> kBioAlphabet = {Label::B, Label::I, Label::O};
constexpr std::array<Label, 3> kNtiAlphabet = {Label::N, Label::T, Label::I};

void require_alphabet(LabelScheme scheme, std::span<const Label> labels) {
  if (labels.empty())
    throw std::invalid_argument("aggregation over an empty label list");
  for (Label l : labels)
    if (!in_alphabet(scheme, l))
      throw std::invalid_argument("label " + std::string(to_string(l)) +
                                  " outside the " +
                                  std::string(to_string(scheme)) + " alphabet");
}

}  // namespace

std::string_view to_string(LabelScheme scheme) {
  switch (scheme) {
    case LabelScheme::kSentenceBI:
      return "bi";
    case LabelScheme::kSlateBIO:
      return "bio";
    case LabelScheme::kSlateNTI:
      return "nti";
  }
  return "nti";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::B:
      return "B";
    case Label::I:
      return "I";
    case Label::O:
      return "O";
    case Label::N:
      return "N";
    case Label::T:
      return "T";
  }
  return "I";
}

LabelScheme parse_scheme(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bi" || lower == "sentence_bi") return LabelScheme::kSentenceBI;
  if (lower == "bio" || lower == "slate_bio") return LabelScheme::kSlateBIO;
  if (lower == "nti" || lower == "slate_nti") return LabelScheme::kSlateNTI;
  throw DataError("unknown labeling scheme '" + std::string(text) + "'");
}

Label parse_label(std::string_view text) {
  if (text == "B") return Label::B;
  if (text == "I") return Label::I;
  if (text == "O") return Label::O;
  if (text == "N") return Label::N;
  if (text == "T") return Label::T;
  throw DataError("unknown label '" + std::string(text) + "'");
}

std::span<const Label> alphabet(LabelScheme scheme) {
  switch (scheme) {
    case LabelScheme::kSentenceBI:
      return kBiAlphabet;
    case LabelScheme::kSlateBIO:
      return kBioAlphabet;
    case LabelScheme::kSlateNTI:
      return kNtiAlphabet;
  }
  return kNtiAlphabet;
}

bool in_alphabet(LabelScheme scheme, Label label) {
  auto a = alphabet(scheme);
  return std::find(a.begin(), a.end(), label) != a.end();
}

std::size_t label_index(LabelScheme scheme, Label label) {
  auto a = alphabet(scheme);
  auto it = std::find(a.begin(), a.end(), label);
  if (it == a.end())
    throw std::invalid_argument("label " + std::string(to_string(label)) +
                                " outside the scheme alphabet");
  return static_cast<std::size_t>(it - a.begin());
}

bool is_beginning(LabelScheme scheme, Label label) {
  if (scheme == LabelScheme::kSlateNTI)
    return label == Label::N || label == Label::T;
  return label == Label::B;
}

Label continuation_label(LabelScheme scheme) {
  return scheme == LabelScheme::kSlateBIO ? Label::O : Label::I;
}

bool transition_allowed(LabelScheme scheme, std::optional<Label> prev,
                        Label next) {
  if (!in_alphabet(scheme, next)) return false;
  switch (scheme) {
    case LabelScheme::kSentenceBI:
    case LabelScheme::kSlateNTI:
      return prev.has_value() || next != Label::I;
    case LabelScheme::kSlateBIO:
      if (next != Label::I) return true;
      return prev.has_value() && (*prev == Label::B || *prev == Label::I);
  }
  return false;
}

SubwordSplitter identity_splitter() {
  return [](std::string_view word) {
    return std::vector<std::string>{std::string(word)};
  };
}

SubwordSplitter chunk_splitter(std::size_t max_chars) {
  if (max_chars == 0) throw std::invalid_argument("chunk size must be >= 1");
  return [max_chars](std::string_view word) {
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < word.size(); i += max_chars)
      pieces.emplace_back(word.substr(i, max_chars));
    return pieces;
  };
}

std::vector<RenderedToken> render_range(const WritingRegion& region,
                                        std::size_t begin, std::size_t end,
                                        const SubwordSplitter& splitter,
                                        bool with_layout) {
  std::vector<RenderedToken> tokens;
  tokens.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (with_layout) {
      if (region.layout.bullet_before.count(i))
        tokens.push_back({std::string(kBulletMarker), TokenKind::kBullet, {}});
      if (region.layout.line_break_before.count(i))
        tokens.push_back(
            {std::string(kLineBreakMarker), TokenKind::kLineBreak, {}});
    }
    auto pieces = splitter(region.words[i].text);
    if (pieces.empty())
      throw DataError("empty tokenization for word " + std::to_string(i) +
                      " of region " + region.region_id);
    for (auto& p : pieces)
      tokens.push_back({std::move(p), TokenKind::kWordPiece, i});
  }
  return tokens;
}

std::vector<RenderedToken> render_with_layout(const WritingRegion& region,
                                              const SubwordSplitter& splitter) {
  return render_range(region, 0, region.size(), splitter, true);
}

LabelSequence encode_spans(const std::vector<SentenceSpan>& spans,
                           std::size_t word_count, LabelScheme scheme) {
  LabelSequence out{scheme, std::vector<Label>(word_count, continuation_label(
                                                               scheme))};
  for (const auto& s : spans) {
    if (s.end > word_count || s.start >= s.end)
      throw DataError("span out of range while encoding");
    switch (scheme) {
      case LabelScheme::kSentenceBI:
        out.labels[s.start] = Label::B;
        for (std::size_t i = s.start + 1; i < s.end; ++i)
          out.labels[i] = Label::I;
        break;
      case LabelScheme::kSlateBIO:
        if (!s.is_task()) break;
        out.labels[s.start] = Label::B;
        for (std::size_t i = s.start + 1; i < s.end; ++i)
          out.labels[i] = Label::I;
        break;
      case LabelScheme::kSlateNTI:
        out.labels[s.start] = s.is_task() ? Label::T : Label::N;
        for (std::size_t i = s.start + 1; i < s.end; ++i)
          out.labels[i] = Label::I;
        break;
    }
  }
  return out;
}

LabelSequence encode_word_labels(const WritingRegion& region,
                                 LabelScheme scheme) {
  if (region.gold_sentences.empty())
    throw DataError("region " + region.region_id +
                    " has no gold annotations to encode");
  return encode_spans(region.gold_sentences, region.size(), scheme);
}

std::vector<Label> project_to_tokens(const LabelSequence& word_labels,
                                     std::span<const RenderedToken> tokens) {
  const auto scheme = word_labels.scheme;
  std::vector<Label> out(tokens.size(), continuation_label(scheme));
  std::optional<std::size_t> last_word;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    if (tok.is_marker()) continue;
    if (!tok.word_index || *tok.word_index >= word_labels.labels.size())
      throw DataError("token/word mismatch at token " + std::to_string(k));
    const Label word_label = word_labels.labels[*tok.word_index];
    const bool first_piece = last_word != tok.word_index;
    if (!first_piece && is_beginning(scheme, word_label))
      out[k] = Label::I;
    else
      out[k] = word_label;
    last_word = tok.word_index;
  }
  // Markers take the label of the next word piece; trailing markers keep the
  // continuation label.
  for (std::size_t k = tokens.size(); k-- > 0;) {
    if (tokens[k].is_marker() && k + 1 < tokens.size()) out[k] = out[k + 1];
  }
  return out;
}

Label aggregate_bi(std::span<const Label> token_labels) {
  require_alphabet(LabelScheme::kSentenceBI, token_labels);
  return std::find(token_labels.begin(), token_labels.end(), Label::B) !=
                 token_labels.end()
             ? Label::B
             : Label::I;
}

Label aggregate_bio(std::span<const Label> token_labels) {
  require_alphabet(LabelScheme::kSlateBIO, token_labels);
  if (std::find(token_labels.begin(), token_labels.end(), Label::B) !=
      token_labels.end())
    return Label::B;
  const auto inside = std::count(token_labels.begin(), token_labels.end(),
                                 Label::I);
  const auto outside = std::count(token_labels.begin(), token_labels.end(),
                                  Label::O);
  // Ties go to I.
  return inside >= outside ? Label::I : Label::O;
}

Label aggregate_nti(std::span<const Label> token_labels) {
  require_alphabet(LabelScheme::kSlateNTI, token_labels);
  const auto tasks = std::count(token_labels.begin(), token_labels.end(),
                                Label::T);
  const auto nontasks = std::count(token_labels.begin(), token_labels.end(),
                                   Label::N);
  if (tasks == 0 && nontasks == 0) return Label::I;
  return tasks > nontasks ? Label::T : Label::N;
}

Label aggregate(LabelScheme scheme, std::span<const Label> token_labels) {
  switch (scheme) {
    case LabelScheme::kSentenceBI:
      return aggregate_bi(token_labels);
    case LabelScheme::kSlateBIO:
      return aggregate_bio(token_labels);
    case LabelScheme::kSlateNTI:
      return aggregate_nti(token_labels);
  }
  return Label::I;
}

LabelSequence aggregate_tokens(LabelScheme scheme,
                               std::span<const RenderedToken> tokens,
                               std::span<const Label> token_labels,
                               std::size_t word_count) {
  if (tokens.size() != token_labels.size())
    throw DataError("token and label counts differ");
  std::vector<std::vector<Label>> per_word(word_count);
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k].is_marker()) continue;
    const auto w = tokens[k].word_index.value_or(word_count);
    if (w >= word_count) throw DataError("token word index out of range");
    per_word[w].push_back(token_labels[k]);
  }
  LabelSequence out{scheme, {}};
  out.labels.reserve(word_count);
  for (std::size_t w = 0; w < word_count; ++w) {
    if (per_word[w].empty())
      throw DataError("word " + std::to_string(w) + " has no tokens");
    out.labels.push_back(aggregate(scheme, per_word[w]));
  }
  return out;
}

DecodeResult decode(const LabelSequence& word_labels) {
  const auto scheme = word_labels.scheme;
  const auto& labels = word_labels.labels;
  DecodeResult result;
  auto close = [&](std::optional<SentenceSpan>& open, std::size_t end) {
    if (open) {
      open->end = end;
      result.spans.push_back(*open);
      open.reset();
    }
  };

  std::optional<SentenceSpan> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Label l = labels[i];
    if (!in_alphabet(scheme, l))
      throw DataError("label " + std::string(to_string(l)) +
                      " outside the scheme alphabet at word " +
                      std::to_string(i));
    switch (scheme) {
      case LabelScheme::kSentenceBI:
        if (l == Label::I && !open) {
          result.repairs.push_back("leading I at word " + std::to_string(i) +
                                   " treated as B");
          l = Label::B;
        }
        if (l == Label::B) {
          close(open, i);
          open = SentenceSpan{i, i, SentenceLabel::kUnlabeled, false};
        }
        break;
      case LabelScheme::kSlateBIO:
        if (l == Label::I && !open) {
          result.repairs.push_back("orphan I at word " + std::to_string(i) +
                                   " treated as O");
          l = Label::O;
        }
        if (l == Label::B) {
          close(open, i);
          open = SentenceSpan{i, i, SentenceLabel::kTask, false};
        } else if (l == Label::O) {
          close(open, i);
        }
        break;
      case LabelScheme::kSlateNTI:
        if (l == Label::I && !open) {
          result.repairs.push_back("leading I at word " + std::to_string(i) +
                                   " treated as N");
          l = Label::N;
        }
        if (l == Label::T || l == Label::N) {
          close(open, i);
          open = SentenceSpan{i, i,
                              l == Label::T ? SentenceLabel::kTask
                                            : SentenceLabel::kNonTask,
                              false};
        }
        break;
    }
  }
  close(open, labels.size());
  return result;
}

LabelSequence nti_to_bio(const LabelSequence& nti) {
  if (nti.scheme != LabelScheme::kSlateNTI)
    throw std::invalid_argument("nti_to_bio expects an NTI sequence");
  LabelSequence out{LabelScheme::kSlateBIO, {}};
  out.labels.reserve(nti.labels.size());
  bool in_task = false;
  for (Label l : nti.labels) {
    if (l == Label::T) {
      in_task = true;
      out.labels.push_back(Label::B);
    } else if (l == Label::N) {
      in_task = false;
      out.labels.push_back(Label::O);
    } else {
      out.labels.push_back(in_task ? Label::I : Label::O);
    }
  }
  return out;
}

}  // namespace slate
