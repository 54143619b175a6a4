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


#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "prefgraph/error.h"
#include "prefgraph/metrics.h"

namespace prefgraph {
namespace {

constexpr Verdict F = Verdict::kFirstWins;
constexpr Verdict S = Verdict::kSecondWins;
constexpr Verdict T = Verdict::kTie;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(AdjustedWinRate, Examples) {
  EXPECT_EQ(adjusted_win_rate(10, 10, 0), 0.5);
  EXPECT_EQ(adjusted_win_rate(0, 0, 10), 0.5);
  EXPECT_EQ(adjusted_win_rate(5, 0, 5), 0.75);
  EXPECT_EQ(code_of([] { adjusted_win_rate(0, 0, 0); }), ErrorCode::kNoComparisons);
}

TEST(AdjustedWinRate, Complementarity) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(0, 1000);
  for (int i = 0; i < 1000; ++i) {
    const double w = count(rng), l = count(rng), t = count(rng) + 1;
    EXPECT_NEAR(adjusted_win_rate(w, l, t) + adjusted_win_rate(l, w, t), 1.0, 1e-12);
  }
}

TEST(Dispersion, Examples) {
  const std::vector<WinRateRecord> equal{{"a", 3, 3, 0}, {"b", 1, 1, 2}, {"c", 0, 0, 4}};
  EXPECT_EQ(win_rate_dispersion(equal), 0.0);
  const std::vector<WinRateRecord> extremes{{"a", 0, 5, 0}, {"b", 5, 0, 0}};
  EXPECT_DOUBLE_EQ(win_rate_dispersion(extremes), 0.5);
  const std::vector<WinRateRecord> one{{"a", 1, 0, 0}};
  EXPECT_EQ(code_of([&] { win_rate_dispersion(one); }), ErrorCode::kInsufficientData);
}

TEST(Dispersion, MatchesTwoPassDefinition) {
  const std::vector<WinRateRecord> records{{"m1", 61, 30, 9},  {"m2", 44, 50, 6},
                                           {"m3", 12, 80, 8},  {"m4", 70, 20, 10},
                                           {"m5", 33, 33, 34}, {"m6", 50, 45, 5},
                                           {"m7", 5, 90, 5}};
  double mean = 0.0;
  for (const auto& r : records) mean += (r.wins + r.ties / 2) / (r.wins + r.losses + r.ties);
  mean /= 7.0;
  double var = 0.0;
  for (const auto& r : records) {
    const double x = (r.wins + r.ties / 2) / (r.wins + r.losses + r.ties) - mean;
    var += x * x;
  }
  EXPECT_NEAR(win_rate_dispersion(records), std::sqrt(var / 7.0), 1e-12);
}

AnnotationItem item(std::vector<Verdict> annotators, Verdict model) {
  return {"i", std::move(annotators), model};
}

TEST(HumanConsistency, Examples) {
  const std::vector<AnnotationItem> all{item({F, F, F}, F), item({T, T, T}, F)};
  EXPECT_EQ(human_consistency(all), 1.0);
  const std::vector<AnnotationItem> none{item({F, S, F}, F), item({T, S, S}, F)};
  EXPECT_EQ(human_consistency(none), 0.0);

  std::vector<AnnotationItem> ten;
  for (int i = 0; i < 4; ++i) ten.push_back(item({S, S, S}, F));
  for (int i = 0; i < 6; ++i) ten.push_back(item({S, F, S}, F));
  EXPECT_DOUBLE_EQ(human_consistency(ten), 0.4);
  EXPECT_DOUBLE_EQ(human_consistency(ten, ConsensusMode::kMajority), 1.0);
}

TEST(HumanConsistency, RejectsRaggedAnnotatorCounts) {
  const std::vector<AnnotationItem> ragged{item({F, F, F}, F), item({F, F}, F)};
  EXPECT_EQ(code_of([&] { human_consistency(ragged); }), ErrorCode::kInsufficientData);
}

TEST(Majority, StrictOnly) {
  EXPECT_EQ(majority_verdict(std::vector<Verdict>{F, F, S}), F);
  EXPECT_EQ(majority_verdict(std::vector<Verdict>{F, S, T}), std::nullopt);
  EXPECT_EQ(majority_verdict(std::vector<Verdict>{F, F, S, S}), std::nullopt);
}

TEST(Agreement, Examples) {
  const std::vector<AnnotationItem> aligned{item({F, F, F}, F), item({S, S, S}, S)};
  EXPECT_EQ(model_human_agreement(aligned).rate, 1.0);
  const std::vector<AnnotationItem> opposed{item({F, F, S}, S), item({S, T, S}, F)};
  EXPECT_EQ(model_human_agreement(opposed).rate, 0.0);

  // 8 items with a majority, 6 of which the model matches; 2 without one.
  std::vector<AnnotationItem> ten;
  for (int i = 0; i < 6; ++i) ten.push_back(item({F, F, S}, F));
  for (int i = 0; i < 2; ++i) ten.push_back(item({S, S, T}, F));
  for (int i = 0; i < 2; ++i) ten.push_back(item({F, S, T}, F));
  const auto r = model_human_agreement(ten);
  EXPECT_DOUBLE_EQ(r.rate, 0.75);
  EXPECT_EQ(r.counted, 8u);
  EXPECT_EQ(r.matched, 6u);
  EXPECT_EQ(r.excluded, 2u);
}

TEST(Agreement, Errors) {
  EXPECT_EQ(code_of([] { model_human_agreement({}); }), ErrorCode::kEmptyCorpus);
  const std::vector<AnnotationItem> split{item({F, S, T}, F)};
  EXPECT_EQ(code_of([&] { model_human_agreement(split); }), ErrorCode::kNoMajorityItems);
}

TEST(Ranks, TiesShareMean) {
  const std::vector<double> v{10, 20, 20, 5};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{2, 3.5, 3.5, 1}));
}

// 1 - 6 sum d^2 / (n (n^2 - 1)), valid without ties.
double classic_spearman(const std::vector<double>& a, const std::vector<double>& b) {
  double d2 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
  const double n = static_cast<double>(a.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

TEST(Spearman, Examples) {
  const std::vector<double> id{1, 2, 3, 4, 5};
  const std::vector<double> rev{5, 4, 3, 2, 1};
  const std::vector<double> swapped{2, 1, 4, 3, 5};
  EXPECT_NEAR(spearman(id, id), 1.0, 1e-15);
  EXPECT_NEAR(spearman(id, rev), -1.0, 1e-15);
  EXPECT_NEAR(classic_spearman(id, swapped), 0.8, 1e-15);
  EXPECT_NEAR(spearman(id, swapped), 0.8, 1e-12);
}

TEST(Spearman, MatchesClassicFormulaWithoutTies) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(9), b(9);
    std::iota(a.begin(), a.end(), 1.0);
    std::iota(b.begin(), b.end(), 1.0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    EXPECT_NEAR(spearman(a, b), classic_spearman(a, b), 1e-12);
  }
}

TEST(Spearman, Errors) {
  const std::vector<double> three{1, 2, 3}, two{1, 2}, one{1}, flat{4, 4, 4};
  EXPECT_EQ(code_of([&] { spearman(three, two); }), ErrorCode::kRankMismatch);
  EXPECT_EQ(code_of([&] { spearman(one, one); }), ErrorCode::kInsufficientData);
  EXPECT_EQ(code_of([&] { spearman(three, flat); }), ErrorCode::kDegenerateRanking);
}

TEST(SelfBleu, IdenticalIsOne) {
  EXPECT_EQ(self_bleu("the quick brown fox jumps", "the quick brown fox jumps"), 1.0);
  EXPECT_EQ(self_bleu("Hello World", "hello world"), 1.0);
}

TEST(SelfBleu, DisjointIsZero) {
  EXPECT_EQ(self_bleu("alpha beta gamma", "delta epsilon zeta"), 0.0);
}

TEST(SelfBleu, ReferenceValues) {
  // Computed with an independent n-gram counting script.
  EXPECT_NEAR(self_bleu("The cat sat on the mat", "the cat is on the mat today"),
              0.4085545851641308, 1e-12);
  BleuConfig bigram;
  bigram.max_order = 2;
  EXPECT_NEAR(self_bleu("The cat sat on the mat", "the cat is on the mat today", bigram),
              0.6349033955944181, 1e-12);
  BleuConfig raw;
  raw.add_one_smoothing = false;
  EXPECT_NEAR(self_bleu("a b c d e f g", "a b c d e f h", raw), 0.8091067115702212,
              1e-12);
}

TEST(SelfBleu, Symmetric) {
  const char* a = "one two three four five six";
  const char* b = "one two four three six";
  EXPECT_EQ(self_bleu(a, b), self_bleu(b, a));
}

TEST(SelfBleu, EmptyTextThrows) {
  EXPECT_EQ(code_of([] { self_bleu("", "x"); }), ErrorCode::kEmptyText);
  EXPECT_EQ(code_of([] { self_bleu("x", "   "); }), ErrorCode::kEmptyText);
}

TEST(Tokenize, WhitespaceAndCase) {
  EXPECT_EQ(tokenize("  A\tb\nC  ", true), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(tokenize("A b", false), (std::vector<std::string>{"A", "b"}));
}

}  // namespace
}  // namespace prefgraph
