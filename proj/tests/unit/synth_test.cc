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
#include <set>

#include "prefgraph/entropy.h"
#include "prefgraph/error.h"
#include "prefgraph/oracle.h"
#include "prefgraph/scc.h"
#include "prefgraph/synth.h"
#include "test_util.h"

namespace prefgraph {
namespace {

SynthSpec make_spec(std::size_t models, std::size_t questions, double cycle, double tie,
                    std::uint64_t seed) {
  SynthSpec s;
  s.n_models = models;
  s.n_questions = questions;
  s.cycle_rate = cycle;
  s.tie_rate = tie;
  s.seed = seed;
  return s;
}

TEST(Synth, ConsistentCorpusIsLinear) {
  const auto corpus = gen_corpus(make_spec(5, 20, 0.0, 0.0, 7));
  ASSERT_EQ(corpus.graphs.size(), 20u);
  EXPECT_EQ(corpus.judgments.size(), 20u * 10u * 2u);
  for (const auto& g : corpus.graphs) {
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.bidirectional_count(), 0u);
    std::set<std::size_t> degrees;
    for (std::size_t v = 0; v < g.size(); ++v) degrees.insert(g.in_degree(v));
    EXPECT_EQ(degrees, (std::set<std::size_t>{0, 1, 2, 3, 4}));
  }
  EXPECT_EQ(non_transitivity_ratio(corpus.graphs), 0.0);
  EXPECT_EQ(average_normalized_entropy(corpus.graphs).tau_avg, 0.0);
}

TEST(Synth, GraphsMatchJudgments) {
  const auto corpus = gen_corpus(make_spec(6, 15, 0.3, 0.2, 1));
  const auto grouped = group_by_question(corpus.judgments);
  ASSERT_EQ(grouped.size(), corpus.graphs.size());
  std::size_t i = 0;
  for (const auto& [qid, records] : grouped) {
    EXPECT_EQ(build_tournament(qid, records).graph, corpus.graphs[i++]);
  }
}

TEST(Synth, ManifestCoversJudgments) {
  const auto corpus = gen_corpus(make_spec(4, 3, 0.2, 0.2, 2));
  EXPECT_EQ(corpus.questions.size(), 3u);
  EXPECT_EQ(corpus.responses.size(), 12u);
  CorpusManifest m;
  m.questions = corpus.questions;
  for (const auto& r : corpus.responses) m.responses[{r.question_id, r.model_id}] = r.text;
  EXPECT_NO_THROW(validate_against_manifest(m, corpus.judgments));
}

TEST(Synth, SameSeedSameCorpus) {
  const auto a = gen_corpus(make_spec(7, 30, 0.4, 0.1, 42));
  const auto b = gen_corpus(make_spec(7, 30, 0.4, 0.1, 42));
  EXPECT_EQ(a.judgments, b.judgments);
  const auto c = gen_corpus(make_spec(7, 30, 0.4, 0.1, 43));
  EXPECT_NE(a.judgments, c.judgments);
}

TEST(Synth, FullReversalOfTriangleStaysTransitive) {
  // Reversing every pair of a linear order yields the opposite linear order,
  // so a triangle with cycle_rate = 1 has no cycle.
  const auto corpus = gen_corpus(make_spec(3, 50, 1.0, 0.0, 9));
  for (const auto& g : corpus.graphs) {
    for (const auto& block : oracle::brute_force_scc(g)) EXPECT_EQ(block.size(), 1u);
  }
  EXPECT_EQ(non_transitivity_ratio(corpus.graphs), 0.0);
}

TEST(Synth, HalfFlippedTrianglesAreOftenCyclic) {
  // At rate 1/2 all 8 orientations of a triangle are equally likely and 2 of
  // them are cyclic.
  const auto corpus = gen_corpus(make_spec(3, 2000, 0.5, 0.0, 10));
  const double rho = non_transitivity_ratio(corpus.graphs);
  EXPECT_NEAR(rho, 0.25, 0.04);
}

TEST(Synth, CyclesIncreaseRho) {
  const double base = non_transitivity_ratio(gen_corpus(make_spec(5, 200, 0.0, 0.0, 7)).graphs);
  const double noisy = non_transitivity_ratio(gen_corpus(make_spec(5, 200, 0.3, 0.0, 7)).graphs);
  EXPECT_GT(noisy, base);
}

TEST(Synth, TieVerdictsMode) {
  auto spec = make_spec(4, 5, 0.0, 1.0, 3);
  spec.tie_verdicts = true;
  for (const auto& j : gen_corpus(spec).judgments) EXPECT_EQ(j.verdict, Verdict::kTie);
  spec.tie_verdicts = false;
  for (const auto& j : gen_corpus(spec).judgments) EXPECT_NE(j.verdict, Verdict::kTie);
  for (const auto& g : gen_corpus(spec).graphs) {
    EXPECT_EQ(g.bidirectional_count(), g.pair_count());
  }
}

TEST(Synth, RatesCompose) {
  // cycle_rate applies to the pairs that are not tied.
  EXPECT_NO_THROW(validate(make_spec(5, 5, 1.0, 0.2, 0)));
  const auto corpus = gen_corpus(make_spec(3, 10, 1.0, 1.0, 0));
  for (const auto& g : corpus.graphs) EXPECT_EQ(g.bidirectional_count(), 3u);
}

TEST(Synth, InvalidSpecs) {
  for (const auto& spec : {make_spec(1, 5, 0, 0, 0), make_spec(5, 0, 0, 0, 0),
                           make_spec(5, 5, -0.1, 0, 0), make_spec(5, 5, 0, 1.5, 0),
                           make_spec(5, 5, std::nan(""), 0, 0)}) {
    try {
      validate(spec);
      ADD_FAILURE() << spec.n_models << " " << spec.cycle_rate;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadSpec);
    }
  }
}

TEST(Synth, Identifiers) {
  EXPECT_EQ(synth_model_id(3, 5), "model_03");
  EXPECT_EQ(synth_model_id(7, 150), "model_007");
  EXPECT_EQ(synth_question_id(12, 20), "q0012");
  EXPECT_EQ(synth_question_id(12, 20000), "q00012");
}

TEST(RandomGraph, Properties) {
  const auto g = random_graph({8, 0.0, 0.0}, 1);
  EXPECT_TRUE(g.is_complete());
  EXPECT_EQ(g.bidirectional_count(), 0u);
  EXPECT_EQ(g, random_graph({8, 0.0, 0.0}, 1));
  const auto h = random_graph({8, 0.0, 1.0}, 1);
  EXPECT_EQ(h.relation_count(), 0u);
}

TEST(Oracle, LimitEnforced) {
  try {
    oracle::brute_force_scc(random_graph({oracle::kMaxVertices + 1, 0.0, 0.0}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleLimit);
  }
}

TEST(Oracle, Anchors) {
  const auto cycle = testing::cycle_graph(5);
  EXPECT_EQ(oracle::brute_force_scc(cycle).size(), 1u);
  EXPECT_NEAR(oracle::brute_force_entropy(cycle), std::log2(5.0), 1e-15);
  EXPECT_EQ(oracle::brute_force_entropy(testing::linear_graph(6)), 0.0);
  EXPECT_EQ(oracle::brute_force_scc(testing::linear_graph(4)).size(), 4u);
}

}  // namespace
}  // namespace prefgraph
