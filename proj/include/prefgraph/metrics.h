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

// Downstream diagnostics for judge quality: adjusted win rate and its spread,
// human agreement rates, rank correlation and text similarity.

#ifndef PREFGRAPH_METRICS_H_
#define PREFGRAPH_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefgraph/graph.h"

namespace prefgraph {

// (wins + ties / 2) / (wins + losses + ties). Inputs may be counts or rates.
// Throws Error(kNoComparisons) when the denominator is zero.
double adjusted_win_rate(double wins, double losses, double ties);

struct WinRateRecord {
  std::string model_id;
  double wins = 0;
  double losses = 0;
  double ties = 0;

  double adjusted() const { return adjusted_win_rate(wins, losses, ties); }
};

// Population standard deviation of the adjusted rates. Throws
// Error(kInsufficientData) for fewer than two records.
double win_rate_dispersion(std::span<const WinRateRecord> records);

struct AnnotationItem {
  std::string item_id;
  std::vector<Verdict> annotators;
  Verdict model = Verdict::kTie;
};

enum class ConsensusMode {
  kUnanimous,  // all annotators agree
  kMajority,   // a strict majority agrees
};

// Fraction of items reaching consensus under `mode`. Every item must carry
// the same number (>= 2) of annotator verdicts.
double human_consistency(std::span<const AnnotationItem> items,
                         ConsensusMode mode = ConsensusMode::kUnanimous);

// Verdict held by more than half of the annotators, if any.
std::optional<Verdict> majority_verdict(std::span<const Verdict> verdicts);

struct AgreementResult {
  double rate = 0.0;
  std::size_t counted = 0;   // items with a strict majority
  std::size_t matched = 0;
  std::size_t excluded = 0;  // items without one
};

// Throws Error(kEmptyCorpus) on no items, Error(kNoMajorityItems) when no
// item has a strict majority.
AgreementResult model_human_agreement(std::span<const AnnotationItem> items);

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman correlation as the Pearson correlation of average ranks.
double spearman(std::span<const double> a, std::span<const double> b);

struct BleuConfig {
  int max_order = 4;
  bool add_one_smoothing = true;  // orders >= 2 use (matches+1)/(total+1)
  bool lowercase = true;
};

std::vector<std::string> tokenize(std::string_view text, bool lowercase);

// Sentence-level BLEU of `hypothesis` against a single reference with
// uniform weights and the standard brevity penalty.
double sentence_bleu(std::string_view hypothesis, std::string_view reference,
                     const BleuConfig& config = {});

// Mean of BLEU(a | b) and BLEU(b | a). Throws Error(kEmptyText) when either
// text has no tokens.
double self_bleu(std::string_view a, std::string_view b,
                 const BleuConfig& config = {});

}  // namespace prefgraph

#endif  // PREFGRAPH_METRICS_H_
