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

#include "slate/taggers.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace slate {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Collapsed character classes: "Buy2!" -> "Xxd!".
std::string word_shape(std::string_view text) {
  std::string out;
  char last = 0;
  for (unsigned char c : text) {
    char cls;
    if (std::isupper(c))
      cls = 'X';
    else if (std::islower(c))
      cls = 'x';
    else if (std::isdigit(c))
      cls = 'd';
    else if (c >= 0x80)
      cls = 'u';
    else
      cls = static_cast<char>(c);
    if (cls != last) out.push_back(cls);
    last = cls;
  }
  return out;
}

// Perceptron parameters with running sums for averaging.
struct Averaged {
  std::vector<double> weights;
  std::vector<double> sums;

  explicit Averaged(std::size_t n = 0) : weights(n, 0.0), sums(n, 0.0) {}
  void add(std::size_t i, double delta, double step) {
    weights[i] += delta;
    sums[i] += step * delta;
  }
  double averaged(std::size_t i, double steps) const {
    return weights[i] - sums[i] / steps;
  }
};

struct TokenLattice {
  std::vector<RenderedToken> tokens;
  std::vector<std::vector<std::string>> features;
};

TokenLattice build_lattice(const WritingRegion& region, std::size_t begin,
                           std::size_t end, const TrainConfig& config) {
  TokenLattice lattice;
  lattice.tokens =
      render_range(region, begin, end, identity_splitter(), config.use_layout);
  lattice.features = token_features(lattice.tokens, config, begin == 0);
  return lattice;
}

std::vector<std::vector<double>> emissions(
    const std::unordered_map<std::string, std::vector<double>>& weights,
    const std::vector<std::vector<std::string>>& features,
    std::size_t labels) {
  std::vector<std::vector<double>> out(features.size(),
                                       std::vector<double>(labels, 0.0));
  for (std::size_t k = 0; k < features.size(); ++k)
    for (const auto& f : features[k]) {
      auto it = weights.find(f);
      if (it == weights.end()) continue;
      for (std::size_t y = 0; y < labels; ++y) out[k][y] += it->second[y];
    }
  return out;
}

// Best label index path. `start` is the label preceding the window, empty at
// region start. A marker token's label must equal the next token's label.
template <typename TransitionFn>
std::vector<std::size_t> viterbi(LabelScheme scheme,
                                 const std::vector<RenderedToken>& tokens,
                                 const std::vector<std::vector<double>>& emit,
                                 std::optional<std::size_t> start,
                                 TransitionFn&& transition) {
  const auto labels = alphabet(scheme);
  const std::size_t n = tokens.size(), m = labels.size();
  if (n == 0) return {};
  std::vector<std::vector<double>> delta(n, std::vector<double>(m, kNegInf));
  std::vector<std::vector<std::size_t>> back(n, std::vector<std::size_t>(m, 0));

  std::optional<Label> start_label;
  if (start) start_label = labels[*start];
  for (std::size_t y = 0; y < m; ++y)
    if (transition_allowed(scheme, start_label, labels[y]))
      delta[0][y] = transition(start, y) + emit[0][y];

  for (std::size_t k = 1; k < n; ++k) {
    const bool tied = tokens[k - 1].is_marker();
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t p = 0; p < m; ++p) {
        if (delta[k - 1][p] == kNegInf) continue;
        if (tied && p != y) continue;
        if (!transition_allowed(scheme, labels[p], labels[y])) continue;
        const double s = delta[k - 1][p] + transition(p, y) + emit[k][y];
        if (s > delta[k][y]) {
          delta[k][y] = s;
          back[k][y] = p;
        }
      }
    }
  }

  std::vector<std::size_t> path(n, 0);
  std::size_t best = 0;
  for (std::size_t y = 1; y < m; ++y)
    if (delta[n - 1][y] > delta[n - 1][best]) best = y;
  if (delta[n - 1][best] == kNegInf)
    throw std::logic_error("no well-formed label path");
  path[n - 1] = best;
  for (std::size_t k = n - 1; k > 0; --k) path[k - 1] = back[k][path[k]];
  return path;
}

// Sentence-level features plus the tagger's token features pooled over the
// sentence, as if the sentence were a region of its own.
std::vector<std::string> sentence_features(
    const std::vector<std::string>& words, const TrainConfig& config) {
  std::vector<RenderedToken> tokens;
  tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    tokens.push_back(RenderedToken{words[i], TokenKind::kWordPiece, i});
  TrainConfig text_only = config;
  text_only.use_layout = false;
  const auto per_token = token_features(tokens, text_only, true);

  std::vector<std::string> out;
  out.reserve(words.size() * 16 + 4);
  out.push_back("len=" + std::to_string(std::min<std::size_t>(words.size(), 8)));
  if (!words.empty()) {
    out.push_back("first=" + lower(words.front()));
    out.push_back("last=" + lower(words.back()));
    if (config.use_shape) out.push_back("fshape=" + word_shape(words.front()));
  }
  for (const auto& fs : per_token)
    for (const auto& f : fs) out.push_back("t:" + f);
  return out;
}

double sentence_score(const SentenceClassifierModel& model,
                      const std::vector<std::string>& features) {
  double s = model.bias;
  for (const auto& f : features) {
    auto it = model.feature_weights.find(f);
    if (it != model.feature_weights.end()) s += it->second;
  }
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::hexfloat << v;
  return os.str();
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str()) throw DataError("bad number '" + text + "' in model");
  return v;
}

void write_config(const TrainConfig& c, std::ostream& out) {
  out << "config epochs=" << c.epochs << " seed=" << c.seed
      << " averaging=" << c.averaging << " use_layout=" << c.use_layout
      << " use_shape=" << c.use_shape << " affix_max_len=" << c.affix_max_len
      << '\n';
}

TrainConfig read_config(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("config ", 0) != 0)
    throw DataError("model file: missing config line");
  std::istringstream fields(line.substr(7));
  std::map<std::string, std::string> kv;
  std::string item;
  while (fields >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DataError("model file: bad config");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  TrainConfig c;
  try {
    c.epochs = std::stoi(kv.at("epochs"));
    c.seed = std::stoull(kv.at("seed"));
    c.averaging = kv.at("averaging") == "1";
    c.use_layout = kv.at("use_layout") == "1";
    c.use_shape = kv.at("use_shape") == "1";
    c.affix_max_len = std::stoi(kv.at("affix_max_len"));
  } catch (const std::exception&) {
    throw DataError("model file: incomplete config");
  }
  return c;
}

std::string expect_line(std::istream& in, std::string_view prefix) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(prefix, 0) != 0)
    throw DataError("model file: expected '" + std::string(prefix) + "'");
  return line.substr(prefix.size());
}

std::pair<std::string, std::string> split_feature_line(const std::string& line) {
  const auto tab = line.rfind('\t');
  if (tab == std::string::npos) throw DataError("model file: bad feature line");
  std::string name;
  try {
    name = nlohmann::json::parse(line.substr(0, tab)).get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw DataError("model file: bad feature name");
  }
  return {std::move(name), line.substr(tab + 1)};
}

}  // namespace

void TrainConfig::validate() const {
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (affix_max_len < 1 || affix_max_len > 6)
    throw std::invalid_argument("affix_max_len must be in [1, 6]");
}

double TaggerModel::transition(std::optional<std::size_t> prev,
                               std::size_t next) const {
  const std::size_t m = label_count();
  return transition_weights[(prev ? *prev : m) * m + next];
}

std::vector<std::pair<std::size_t, std::size_t>> inference_windows(
    const WritingRegion& region, std::size_t max_words) {
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  std::size_t line_start = 0;
  for (std::size_t i = 1; i <= region.size(); ++i) {
    if (i == region.size() || region.layout.line_break_before.count(i)) {
      for (std::size_t s = line_start; s < i; s += max_words)
        lines.emplace_back(s, std::min(i, s + max_words));
      line_start = i;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (const auto& [b, e] : lines) {
    if (!windows.empty() && e - windows.back().first <= max_words)
      windows.back().second = e;
    else
      windows.emplace_back(b, e);
  }
  return windows;
}

std::vector<std::vector<std::string>> token_features(
    std::span<const RenderedToken> tokens, const TrainConfig& config,
    bool region_start) {
  std::vector<std::vector<std::string>> out(tokens.size());
  std::size_t position_in_line = 0;
  auto text_at = [&](std::ptrdiff_t k) -> std::string {
    if (k < 0) return "<s>";
    if (k >= static_cast<std::ptrdiff_t>(tokens.size())) return "</s>";
    return lower(tokens[k].text);
  };
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    auto& f = out[k];
    const std::string lw = lower(tok.text);
    f.push_back("bias");
    f.push_back("w=" + lw);
    f.push_back("w-1=" + text_at(static_cast<std::ptrdiff_t>(k) - 1));
    f.push_back("w+1=" + text_at(static_cast<std::ptrdiff_t>(k) + 1));
    f.push_back("w-1w=" + text_at(static_cast<std::ptrdiff_t>(k) - 1) + "|" +
                lw);
    if (k == 0 && region_start) f.push_back("region_start");
    if (tok.is_marker()) {
      f.push_back(tok.kind == TokenKind::kBullet ? "marker=bullet"
                                                 : "marker=break");
    } else {
      if (config.use_shape) {
        f.push_back("shape=" + word_shape(tok.text));
        if (k > 0 && !tokens[k - 1].is_marker())
          f.push_back("shape-1=" + word_shape(tokens[k - 1].text));
      }
      const std::size_t max_affix = std::min<std::size_t>(
          lw.size(), static_cast<std::size_t>(config.affix_max_len));
      for (std::size_t a = 1; a <= max_affix; ++a) {
        f.push_back("p" + std::to_string(a) + "=" + lw.substr(0, a));
        f.push_back("s" + std::to_string(a) + "=" + lw.substr(lw.size() - a));
      }
    }
    if (config.use_layout) {
      if (k > 0 && tokens[k - 1].kind == TokenKind::kBullet)
        f.push_back("follows_bullet");
      if (k > 0 && tokens[k - 1].kind == TokenKind::kLineBreak)
        f.push_back("follows_break");
      if (tok.kind == TokenKind::kLineBreak) position_in_line = 0;
      if (!tok.is_marker()) {
        f.push_back("line_pos=" +
                    std::to_string(std::min<std::size_t>(position_in_line, 3)));
        ++position_in_line;
      }
    }
  }
  return out;
}

TaggerModel train_joint(const std::vector<WritingRegion>& corpus,
                        LabelScheme scheme, const TrainConfig& config) {
  config.validate();
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  const std::size_t m = alphabet(scheme).size();

  // Training instances: one per window, with gold token labels and the gold
  // label preceding the window.
  struct Instance {
    TokenLattice lattice;
    std::vector<std::size_t> gold;
    std::optional<std::size_t> start;
  };
  std::vector<Instance> instances;
  for (const auto& region : corpus) {
    const auto word_labels = encode_word_labels(region, scheme);
    for (const auto& [b, e] : inference_windows(region)) {
      Instance inst;
      inst.lattice = build_lattice(region, b, e, config);
      LabelSequence window_labels{
          scheme, std::vector<Label>(word_labels.labels.begin() + b,
                                     word_labels.labels.begin() + e)};
      auto tokens = inst.lattice.tokens;
      for (auto& t : tokens)
        if (t.word_index) *t.word_index -= b;
      for (Label l : project_to_tokens(window_labels, tokens))
        inst.gold.push_back(label_index(scheme, l));
      if (b > 0) inst.start = label_index(scheme, word_labels.labels[b - 1]);
      instances.push_back(std::move(inst));
    }
  }

  std::unordered_map<std::string, Averaged> features;
  Averaged transitions((m + 1) * m);
  auto tr_index = [m](std::optional<std::size_t> p, std::size_t y) {
    return (p ? *p : m) * m + y;
  };

  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(config.seed);
  double step = 1.0;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order) {
      const auto& inst = instances[idx];
      // Emission scores from the live (non-averaged) weights.
      std::vector<std::vector<double>> emit(inst.lattice.features.size(),
                                            std::vector<double>(m, 0.0));
      for (std::size_t k = 0; k < emit.size(); ++k)
        for (const auto& f : inst.lattice.features[k]) {
          auto it = features.find(f);
          if (it == features.end()) continue;
          for (std::size_t y = 0; y < m; ++y)
            emit[k][y] += it->second.weights[y];
        }
      const auto pred = viterbi(
          scheme, inst.lattice.tokens, emit, inst.start,
          [&](std::optional<std::size_t> p, std::size_t y) {
            return transitions.weights[tr_index(p, y)];
          });

      if (pred != inst.gold) {
        for (std::size_t k = 0; k < pred.size(); ++k) {
          const auto prev_gold =
              k == 0 ? inst.start : std::optional<std::size_t>(inst.gold[k - 1]);
          const auto prev_pred =
              k == 0 ? inst.start : std::optional<std::size_t>(pred[k - 1]);
          if (pred[k] != inst.gold[k]) {
            for (const auto& f : inst.lattice.features[k]) {
              auto [it, _] = features.try_emplace(f, m);
              it->second.add(inst.gold[k], 1.0, step);
              it->second.add(pred[k], -1.0, step);
            }
          }
          if (pred[k] != inst.gold[k] || prev_pred != prev_gold) {
            transitions.add(tr_index(prev_gold, inst.gold[k]), 1.0, step);
            transitions.add(tr_index(prev_pred, pred[k]), -1.0, step);
          }
        }
      }
      step += 1.0;
    }
  }

  TaggerModel model;
  model.scheme = scheme;
  model.config = config;
  auto finalize = [&](const Averaged& a, std::size_t i) {
    return config.averaging ? a.averaged(i, step) : a.weights[i];
  };
  model.transition_weights.resize((m + 1) * m);
  for (std::size_t i = 0; i < model.transition_weights.size(); ++i)
    model.transition_weights[i] = finalize(transitions, i);
  for (const auto& [name, a] : features) {
    std::vector<double> w(m);
    bool nonzero = false;
    for (std::size_t y = 0; y < m; ++y) {
      w[y] = finalize(a, y);
      nonzero = nonzero || w[y] != 0.0;
    }
    if (nonzero) model.feature_weights.emplace(name, std::move(w));
  }
  return model;
}

LabelSequence predict_labels(const TaggerModel& model,
                             const WritingRegion& region,
                             InvocationCounter* counter,
                             std::optional<bool> use_layout) {
  TrainConfig config = model.config;
  if (use_layout) config.use_layout = *use_layout;
  const auto labels = alphabet(model.scheme);
  const std::size_t m = labels.size();

  LabelSequence out{model.scheme, {}};
  out.labels.reserve(region.size());
  std::optional<std::size_t> previous;
  for (const auto& [b, e] : inference_windows(region)) {
    if (counter) ++counter->tagger;
    const auto lattice = build_lattice(region, b, e, config);
    const auto emit = emissions(model.feature_weights, lattice.features, m);
    const auto path = viterbi(
        model.scheme, lattice.tokens, emit, previous,
        [&](std::optional<std::size_t> p, std::size_t y) {
          return model.transition(p, y);
        });
    std::vector<Label> token_labels;
    token_labels.reserve(path.size());
    for (std::size_t y : path) token_labels.push_back(labels[y]);
    auto tokens = lattice.tokens;
    for (auto& t : tokens)
      if (t.word_index) *t.word_index -= b;
    const auto words = aggregate_tokens(model.scheme, tokens, token_labels,
                                        e - b);
    out.labels.insert(out.labels.end(), words.labels.begin(),
                      words.labels.end());
    previous = label_index(model.scheme, out.labels.back());
  }
  return out;
}

std::vector<LabeledSentence> sentences_of(
    const std::vector<WritingRegion>& corpus) {
  std::vector<LabeledSentence> out;
  for (const auto& region : corpus)
    for (const auto& s : region.gold_sentences) {
      LabeledSentence item;
      for (std::size_t i = s.start; i < s.end; ++i)
        item.words.push_back(region.words[i].text);
      item.is_task = s.is_task();
      out.push_back(std::move(item));
    }
  return out;
}

SentenceClassifierModel train_sentence_classifier(
    const std::vector<LabeledSentence>& sentences, const TrainConfig& config) {
  config.validate();
  if (sentences.empty()) throw std::invalid_argument("empty corpus");

  std::vector<std::vector<std::string>> feats;
  feats.reserve(sentences.size());
  for (const auto& s : sentences)
    feats.push_back(sentence_features(s.words, config));

  std::unordered_map<std::string, std::pair<double, double>> weights;
  std::pair<double, double> bias{0.0, 0.0};
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(config.seed);
  double step = 1.0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order) {
      double score = bias.first;
      for (const auto& f : feats[idx]) {
        auto it = weights.find(f);
        if (it != weights.end()) score += it->second.first;
      }
      const bool predicted = score > 0.0;
      if (predicted != sentences[idx].is_task) {
        const double delta = sentences[idx].is_task ? 1.0 : -1.0;
        for (const auto& f : feats[idx]) {
          auto& w = weights[f];
          w.first += delta;
          w.second += step * delta;
        }
        bias.first += delta;
        bias.second += step * delta;
      }
      step += 1.0;
    }
  }

  SentenceClassifierModel model;
  model.config = config;
  auto finalize = [&](const std::pair<double, double>& w) {
    return config.averaging ? w.first - w.second / step : w.first;
  };
  model.bias = finalize(bias);
  for (const auto& [name, w] : weights) {
    const double v = finalize(w);
    if (v != 0.0) model.feature_weights.emplace(name, v);
  }
  return model;
}

bool classify_sentence(const SentenceClassifierModel& model,
                       const std::vector<std::string>& words,
                       InvocationCounter* counter) {
  if (counter) ++counter->classifier;
  return sentence_score(model, sentence_features(words, model.config)) > 0.0;
}

std::vector<SentenceSpan> extract_joint(const TaggerModel& model,
                                        const WritingRegion& region,
                                        InvocationCounter* counter,
                                        std::optional<bool> use_layout) {
  if (model.scheme == LabelScheme::kSentenceBI)
    throw std::invalid_argument(
        "joint extraction needs a BIO or NTI tagger, got a BI segmenter");
  return decode(predict_labels(model, region, counter, use_layout)).spans;
}

std::vector<SentenceSpan> extract_two_model(
    const TaggerModel& segmenter, const SentenceClassifierModel& classifier,
    const WritingRegion& region, InvocationCounter* counter,
    std::optional<bool> use_layout) {
  if (segmenter.scheme != LabelScheme::kSentenceBI)
    throw std::invalid_argument("two-model extraction needs a BI segmenter");
  auto spans =
      decode(predict_labels(segmenter, region, counter, use_layout)).spans;
  std::vector<std::string> words;
  for (auto& s : spans) {
    words.clear();
    for (std::size_t i = s.start; i < s.end; ++i)
      words.push_back(region.words[i].text);
    s.label = classify_sentence(classifier, words, counter)
                  ? SentenceLabel::kTask
                  : SentenceLabel::kNonTask;
  }
  return spans;
}

void save_model(const TaggerModel& model, std::ostream& out) {
  out << "slate-tagger 1\n";
  out << "scheme " << to_string(model.scheme) << '\n';
  write_config(model.config, out);
  const std::size_t m = model.label_count();
  out << "transitions " << m + 1 << ' ' << m << '\n';
  for (std::size_t r = 0; r <= m; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      out << (c ? " " : "") << format_double(model.transition_weights[r * m + c]);
    out << '\n';
  }
  std::vector<const std::string*> names;
  names.reserve(model.feature_weights.size());
  for (const auto& [name, _] : model.feature_weights) names.push_back(&name);
  std::sort(names.begin(), names.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  out << "features " << names.size() << '\n';
  for (const auto* name : names) {
    out << nlohmann::json(*name).dump() << '\t';
    const auto& w = model.feature_weights.at(*name);
    for (std::size_t y = 0; y < w.size(); ++y)
      out << (y ? " " : "") << format_double(w[y]);
    out << '\n';
  }
}

void save_model(const SentenceClassifierModel& model, std::ostream& out) {
  out << "slate-classifier 1\n";
  write_config(model.config, out);
  out << "bias " << format_double(model.bias) << '\n';
  std::vector<const std::string*> names;
  for (const auto& [name, _] : model.feature_weights) names.push_back(&name);
  std::sort(names.begin(), names.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  out << "features " << names.size() << '\n';
  for (const auto* name : names)
    out << nlohmann::json(*name).dump() << '\t'
        << format_double(model.feature_weights.at(*name)) << '\n';
}

TaggerModel load_tagger(std::istream& in) {
  if (expect_line(in, "slate-tagger ") != "1")
    throw DataError("unsupported tagger model version");
  TaggerModel model;
  model.scheme = parse_scheme(expect_line(in, "scheme "));
  model.config = read_config(in);
  const std::size_t m = model.label_count();
  std::istringstream dims(expect_line(in, "transitions "));
  std::size_t rows = 0, cols = 0;
  dims >> rows >> cols;
  if (rows != m + 1 || cols != m)
    throw DataError("model file: transition table does not fit the scheme");
  model.transition_weights.resize(rows * cols);
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) throw DataError("model file: truncated");
    std::istringstream row(line);
    for (std::size_t c = 0; c < cols; ++c) {
      std::string v;
      if (!(row >> v)) throw DataError("model file: short transition row");
      model.transition_weights[r * cols + c] = parse_double(v);
    }
  }
  const std::size_t count = std::stoul(expect_line(in, "features "));
  model.feature_weights.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) throw DataError("model file: truncated");
    auto [name, values] = split_feature_line(line);
    std::istringstream vs(values);
    std::vector<double> w(m);
    for (std::size_t y = 0; y < m; ++y) {
      std::string v;
      if (!(vs >> v)) throw DataError("model file: short feature row");
      w[y] = parse_double(v);
    }
    model.feature_weights.emplace(std::move(name), std::move(w));
  }
  return model;
}

SentenceClassifierModel load_classifier(std::istream& in) {
  if (expect_line(in, "slate-classifier ") != "1")
    throw DataError("unsupported classifier model version");
  SentenceClassifierModel model;
  model.config = read_config(in);
  model.bias = parse_double(expect_line(in, "bias "));
  const std::size_t count = std::stoul(expect_line(in, "features "));
  std::string line;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) throw DataError("model file: truncated");
    auto [name, value] = split_feature_line(line);
    model.feature_weights.emplace(std::move(name), parse_double(value));
  }
  return model;
}

void save_model(const TaggerModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  save_model(model, out);
}

void save_model(const SentenceClassifierModel& model,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  save_model(model, out);
}

TaggerModel load_tagger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model " + path.string());
  return load_tagger(in);
}

SentenceClassifierModel load_classifier(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model " + path.string());
  return load_classifier(in);
}

}  // namespace slate
