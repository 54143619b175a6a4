// Copyright 2026 The Prefgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prefgraph/metrics.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>

#include "prefgraph/error.h"

namespace prefgraph {

double adjusted_win_rate(double wins, double losses, double ties) {
  if (wins < 0 || losses < 0 || ties < 0) {
    throw Error(ErrorCode::kNoComparisons, "negative win/loss/tie input");
  }
  const double total = wins + losses + ties;
  if (total <= 0) {
    throw Error(ErrorCode::kNoComparisons, "no comparisons recorded");
  }
  return (wins + 0.5 * ties) / total;
}

double win_rate_dispersion(std::span<const WinRateRecord> records) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "need at least two models, got " +
                    std::to_string(records.size()));
  }
  std::vector<double> rates;
  rates.reserve(records.size());
  for (const auto& r : records) rates.push_back(r.adjusted());
  const double n = static_cast<double>(rates.size());
  const double mean = std::accumulate(rates.begin(), rates.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : rates) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / n);
}

std::optional<Verdict> majority_verdict(std::span<const Verdict> verdicts) {
  std::array<std::size_t, 3> counts{};
  for (Verdict v : verdicts) ++counts[static_cast<std::size_t>(v)];
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (2 * counts[k] > verdicts.size()) return static_cast<Verdict>(k);
  }
  return std::nullopt;
}

namespace {

void check_annotator_counts(std::span<const AnnotationItem> items) {
  if (items.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no annotation items");
  }
  const std::size_t expected = items.front().annotators.size();
  for (const auto& item : items) {
    if (item.annotators.size() < 2 || item.annotators.size() != expected) {
      throw Error(ErrorCode::kInsufficientData,
                  "item '" + item.item_id + "' has " +
                      std::to_string(item.annotators.size()) +
                      " annotator verdicts, expected " +
                      std::to_string(expected) + " (>= 2)");
    }
  }
}

}  // namespace

double human_consistency(std::span<const AnnotationItem> items,
                         ConsensusMode mode) {
  check_annotator_counts(items);
  std::size_t agreeing = 0;
  for (const auto& item : items) {
    const auto& v = item.annotators;
    bool ok = mode == ConsensusMode::kUnanimous
                  ? std::all_of(v.begin(), v.end(),
                                [&](Verdict x) { return x == v.front(); })
                  : majority_verdict(v).has_value();
    if (ok) ++agreeing;
  }
  return static_cast<double>(agreeing) / static_cast<double>(items.size());
}

AgreementResult model_human_agreement(std::span<const AnnotationItem> items) {
  check_annotator_counts(items);
  AgreementResult out;
  for (const auto& item : items) {
    auto majority = majority_verdict(item.annotators);
    if (!majority) {
      ++out.excluded;
      continue;
    }
    ++out.counted;
    if (*majority == item.model) ++out.matched;
  }
  if (out.counted == 0) {
    throw Error(ErrorCode::kNoMajorityItems,
                "no item has a strict annotator majority");
  }
  out.rate = static_cast<double>(out.matched) / static_cast<double>(out.counted);
  return out;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank mean(i+1 .. j+1).
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kRankMismatch,
                "rankings have " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " items");
  }
  if (a.size() < 2) {
    throw Error(ErrorCode::kInsufficientData, "need at least two items");
  }
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(ra.size());
  // Both rank vectors have mean (n + 1) / 2 regardless of ties.
  const double mean = 0.5 * (n + 1.0);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorCode::kDegenerateRanking,
                "a ranking is constant; correlation undefined");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::vector<std::string> tokenize(std::string_view text, bool lowercase) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(lowercase ? static_cast<char>(std::tolower(uc)) : c);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, std::size_t> count_ngrams(const std::vector<std::string>& toks,
                                          std::size_t order) {
  std::map<Ngram, std::size_t> counts;
  if (toks.size() < order) return counts;
  for (std::size_t i = 0; i + order <= toks.size(); ++i) {
    ++counts[Ngram(toks.begin() + static_cast<std::ptrdiff_t>(i),
                   toks.begin() + static_cast<std::ptrdiff_t>(i + order))];
  }
  return counts;
}

double bleu_tokens(const std::vector<std::string>& hyp,
                   const std::vector<std::string>& ref,
                   const BleuConfig& config) {
  double log_sum = 0.0;
  for (int order = 1; order <= config.max_order; ++order) {
    const auto o = static_cast<std::size_t>(order);
    const auto hyp_counts = count_ngrams(hyp, o);
    const auto ref_counts = count_ngrams(ref, o);
    std::size_t matches = 0;
    std::size_t total = 0;
    for (const auto& [gram, count] : hyp_counts) {
      total += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
    }
    double num = static_cast<double>(matches);
    double den = static_cast<double>(total);
    if (order >= 2 && config.add_one_smoothing) {
      num += 1.0;
      den += 1.0;
    }
    if (num == 0.0 || den == 0.0) return 0.0;
    log_sum += std::log(num / den);
  }
  const double hyp_len = static_cast<double>(hyp.size());
  const double ref_len = static_cast<double>(ref.size());
  const double bp = hyp_len >= ref_len ? 1.0 : std::exp(1.0 - ref_len / hyp_len);
  return bp * std::exp(log_sum / static_cast<double>(config.max_order));
}

}  // namespace

double sentence_bleu(std::string_view hypothesis, std::string_view reference,
                     const BleuConfig& config) {
  const auto hyp = tokenize(hypothesis, config.lowercase);
  const auto ref = tokenize(reference, config.lowercase);
  if (hyp.empty() || ref.empty()) {
    throw Error(ErrorCode::kEmptyText, "text has no tokens");
  }
  if (config.max_order < 1) {
    throw Error(ErrorCode::kBadSpec, "BLEU max order must be >= 1");
  }
  return bleu_tokens(hyp, ref, config);
}

double self_bleu(std::string_view a, std::string_view b,
                 const BleuConfig& config) {
  return 0.5 * (sentence_bleu(a, b, config) + sentence_bleu(b, a, config));
}

}  // namespace prefgraph
