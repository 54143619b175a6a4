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

#include <algorithm>
#include <cmath>
#include <tuple>

#include "prefgraph/error.h"
#include "prefgraph/purify.h"
#include "prefgraph/scc.h"
#include "prefgraph/synth.h"
#include "test_util.h"

namespace prefgraph {
namespace {

using testing::add_pair;
using testing::add_win;
using testing::judgment;
using testing::judgments_for;
using testing::linear_graph;
using testing::make_graph;

constexpr Verdict F = Verdict::kFirstWins;
constexpr Verdict S = Verdict::kSecondWins;
constexpr Verdict T = Verdict::kTie;

std::vector<Relation> sorted(std::vector<Relation> rs) {
  std::sort(rs.begin(), rs.end());
  return rs;
}

const SccComponent& component_of(const TournamentGraph& g, const SccDecomposition& d,
                                 const std::string& v) {
  return d.components[d.component_of[g.index_of(v)]];
}

TEST(ReconstructScc, ThreeCycleBecomesTies) {
  const auto g = make_graph({"A", "B", "C"}, {"B>A", "C>B", "A>C"});
  const auto d = analyze_scc(g);
  EXPECT_EQ(sorted(reconstruct_scc(g, d.components[0])),
            sorted({Relation::bidirectional("A", "B"), Relation::bidirectional("A", "C"),
                    Relation::bidirectional("B", "C")}));
}

TEST(ReconstructScc, FourVertexInDegreeTrace) {
  // A=D, B=C, A beats B and C, B and C beat D. In-degrees A3 B2 C2 D1 and the
  // whole graph is one component (D->B->A->D).
  const auto g = make_graph({"A", "B", "C", "D"},
                            {"A=D", "B=C", "A>B", "A>C", "B>D", "C>D"});
  EXPECT_EQ(in_degree(g, "A"), 3u);
  EXPECT_EQ(in_degree(g, "B"), 2u);
  EXPECT_EQ(in_degree(g, "C"), 2u);
  EXPECT_EQ(in_degree(g, "D"), 1u);
  const auto d = analyze_scc(g);
  ASSERT_EQ(d.count(), 1u);
  EXPECT_EQ(sorted(reconstruct_scc(g, d.components[0])),
            sorted({Relation::directed("A", "B"), Relation::directed("A", "C"),
                    Relation::directed("A", "D"), Relation::bidirectional("B", "C"),
                    Relation::directed("B", "D"), Relation::directed("C", "D")}));
}

TEST(ReconstructScc, UsesGlobalInDegree) {
  // Cycle {A,B,C}; an outsider E loses to A only, lifting A above B and C.
  const auto g = make_graph({"A", "B", "C", "E"}, {"B>A", "C>B", "A>C", "A>E", "B>E", "C>E"});
  const auto d = analyze_scc(g);
  const auto rel = sorted(reconstruct_scc(g, component_of(g, d, "A")));
  // Everyone beats E, so in-degrees are 2 each: all ties.
  EXPECT_EQ(rel.size(), 3u);
  for (const auto& r : rel) EXPECT_FALSE(r.is_directed());

  const auto h = make_graph({"A", "B", "C", "E"}, {"B>A", "C>B", "A>C", "A>E"});
  const auto dh = analyze_scc(h);
  EXPECT_EQ(sorted(reconstruct_scc(h, component_of(h, dh, "A"))),
            sorted({Relation::directed("A", "B"), Relation::directed("A", "C"),
                    Relation::bidirectional("B", "C")}));
}

TEST(ReconstructScc, SingletonIsEmpty) {
  const auto g = linear_graph(3);
  const auto d = analyze_scc(g);
  EXPECT_TRUE(reconstruct_scc(g, d.components[0]).empty());
}

TEST(GlobalDag, AcyclicInputUnchanged) {
  const auto g = make_graph({"A", "B", "C", "D"}, {"A>B", "A>C", "A>D", "B=C", "B>D", "C>D"});
  EXPECT_EQ(build_global_dag(g), g);
}

TEST(GlobalDag, FigureOneCycleBecomesTieTriangle) {
  const auto g = make_graph({"A", "B", "C"}, {"B>A", "C>B", "A>C"});
  const auto dag = build_global_dag(g);
  EXPECT_EQ(dag.bidirectional_count(), 3u);
  EXPECT_EQ(non_transitive_vertex_count(analyze_scc(dag)), 0u);
}

TEST(GlobalDag, TwoJoinedCycles) {
  const auto g = make_graph(
      {"x0", "x1", "x2", "y0", "y1", "y2"},
      {"x1>x0", "x2>x1", "x0>x2", "y1>y0", "y2>y1", "y0>y2", "y0>x0", "y0>x1",
       "y0>x2", "y1>x0", "y1>x1", "y1>x2", "y2>x0", "y2>x1", "y2>x2"});
  const auto dag = build_global_dag(g);
  for (const auto& r : dag.relations()) {
    const bool internal = r.a[0] == r.b[0];
    if (internal) {
      EXPECT_FALSE(r.is_directed()) << r.a << r.b;
    } else {
      ASSERT_TRUE(r.is_directed());
      EXPECT_EQ(r.a[0], 'y');
    }
  }
  const auto d = analyze_scc(dag);
  EXPECT_TRUE(condensation_is_acyclic(dag, d));
  EXPECT_EQ(non_transitive_vertex_count(d), 0u);
}

TEST(GlobalDag, RandomTournamentsBecomeTransitive) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph({3 + seed % 8, 0.15, 0.0}, seed);
    const auto dag = build_global_dag(g);
    EXPECT_EQ(non_transitive_vertex_count(analyze_scc(dag)), 0u) << seed;
    // Relations between different components are untouched.
    const auto d = analyze_scc(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (d.component_of[i] != d.component_of[j]) {
          EXPECT_EQ(g.cell(i, j), dag.cell(i, j));
        }
      }
    }
  }
}

TEST(GlobalDag, IncompleteGraphThrows) {
  const auto g = make_graph({"A", "B", "C"}, {"A>B"});
  try {
    build_global_dag(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteGraph);
  }
}

TEST(Canonical, WinMapsToPromptOrder) {
  // Arc B -> A: A wins.
  const auto dag = make_graph({"A", "B", "C"}, {"A>B", "A=C", "C>B"});
  const auto canon = canonical_relations(dag);
  EXPECT_TRUE(canon.matches("A", "B", F));
  EXPECT_TRUE(canon.matches("B", "A", S));
  EXPECT_FALSE(canon.matches("A", "B", S));
  EXPECT_FALSE(canon.matches("A", "B", T));
  EXPECT_TRUE(canon.matches("A", "C", T));
  EXPECT_TRUE(canon.matches("C", "A", T));
  EXPECT_FALSE(canon.matches("C", "A", F));
  const auto ab = canon.lookup("B", "A");
  ASSERT_TRUE(ab.has_value());
  EXPECT_EQ(ab->a, "A");
  EXPECT_EQ(ab->b, "B");
  EXPECT_EQ(ab->winner, "A");
  EXPECT_EQ(canon.size(), 3u);
}

TEST(Canonical, UncoveredPairThrows) {
  const auto canon = canonical_relations(make_graph({"A", "B", "C"}, {"A>B"}));
  try {
    canon.matches("A", "C", F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUncoveredPair);
  }
}

TEST(Split, MatchingJudgmentIsCleaned) {
  const auto canon = canonical_relations(make_graph({"A", "B"}, {"A>B"}));
  const std::vector<Judgment> js{judgment("q", "A", "B", F), judgment("q", "B", "A", F)};
  const auto split = split_dataset(js, canon);
  ASSERT_EQ(split.cleaned.size(), 1u);
  EXPECT_EQ(split.cleaned[0], js[0]);
  ASSERT_EQ(split.discarded.size(), 1u);
  EXPECT_EQ(split.discarded[0], js[1]);
}

TEST(Purify, ThreeCycleDiscardsEverything) {
  std::vector<Judgment> js;
  add_win(js, "q", "A", "B");
  add_win(js, "q", "B", "C");
  add_win(js, "q", "C", "A");
  const auto out = purify_question("q", js);
  EXPECT_TRUE(out.cleaned.empty());
  EXPECT_EQ(out.discarded.size(), 6u);
  EXPECT_EQ(out.retention(), 0.0);
}

TEST(Purify, LinearKeepsEverything) {
  const auto js = judgments_for(linear_graph(5));
  const auto out = purify_question("linear", js);
  EXPECT_EQ(out.cleaned, js);
  EXPECT_TRUE(out.discarded.empty());
  EXPECT_EQ(out.retention(), 1.0);
}

TEST(Purify, PositionBiasPairIsDropped) {
  std::vector<Judgment> js;
  add_win(js, "q", "A", "B");
  add_win(js, "q", "A", "C");
  add_pair(js, "q", "B", "C", F, F);  // flip disagreement -> B=C canonical tie
  const auto out = purify_question("q", js);
  EXPECT_EQ(out.cleaned.size(), 4u);
  EXPECT_EQ(out.discarded.size(), 2u);
  for (const auto& j : out.discarded) {
    EXPECT_TRUE((j.first == "B" && j.second == "C") || (j.first == "C" && j.second == "B"));
  }
}

TEST(Purify, PartitionPreservesInput) {
  SynthSpec spec;
  spec.n_models = 6;
  spec.n_questions = 20;
  spec.cycle_rate = 0.4;
  spec.tie_rate = 0.2;
  spec.seed = 3;
  const auto corpus = gen_corpus(spec);
  const auto filter = purify_corpus(corpus.judgments, 4);
  std::vector<Judgment> recombined;
  for (const auto& o : filter.outcomes) {
    recombined.insert(recombined.end(), o.cleaned.begin(), o.cleaned.end());
    recombined.insert(recombined.end(), o.discarded.begin(), o.discarded.end());
  }
  auto key = [](const Judgment& j) { return std::tie(j.question_id, j.first, j.second); };
  auto by_key = [&](const Judgment& a, const Judgment& b) { return key(a) < key(b); };
  auto input = corpus.judgments;
  std::sort(input.begin(), input.end(), by_key);
  std::sort(recombined.begin(), recombined.end(), by_key);
  EXPECT_EQ(input, recombined);
}

TEST(Purify, CorpusSkipsIncompleteQuestions) {
  std::vector<Judgment> js;
  add_win(js, "good", "A", "B");
  add_win(js, "bad", "A", "B");
  js.push_back(judgment("bad", "A", "C", F));
  const auto filter = purify_corpus(js);
  ASSERT_EQ(filter.outcomes.size(), 1u);
  EXPECT_EQ(filter.outcomes[0].question_id, "good");
  EXPECT_EQ(filter.skipped, (std::vector<std::string>{"bad"}));
  EXPECT_EQ(filter.skipped_judgments, 3u);
}

TEST(Purify, ThreadCountDoesNotChangeOutcome) {
  SynthSpec spec;
  spec.n_models = 7;
  spec.n_questions = 40;
  spec.cycle_rate = 0.3;
  spec.tie_rate = 0.1;
  spec.seed = 99;
  const auto corpus = gen_corpus(spec);
  const auto a = purify_corpus(corpus.judgments, 1);
  const auto b = purify_corpus(corpus.judgments, 8);
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    EXPECT_EQ(a.outcomes[i].cleaned, b.outcomes[i].cleaned);
    EXPECT_EQ(a.outcomes[i].discarded, b.outcomes[i].discarded);
  }
}

TEST(VerifyPurity, EmptyThrows) {
  try {
    verify_purity({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(VerifyPurity, TransitiveCorpusIsPure) {
  const auto js = judgments_for(linear_graph(4));
  const auto report = verify_purity(js);
  EXPECT_EQ(report.rho, 0.0);
  EXPECT_EQ(report.tau_avg, 0.0);
  EXPECT_EQ(report.questions, 1u);
}

TEST(VerifyPurity, CleanedSyntheticCorporaArePure) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SynthSpec spec;
    spec.n_models = 3 + seed % 8;
    spec.n_questions = 5;
    spec.cycle_rate = std::vector<double>{0.0, 0.2, 0.5, 1.0}[seed % 4];
    spec.tie_rate = seed % 2 == 0 ? 0.0 : 0.2;
    spec.seed = seed;
    const auto filter = purify_corpus(gen_corpus(spec).judgments);
    std::vector<Judgment> cleaned;
    for (const auto& o : filter.outcomes) {
      cleaned.insert(cleaned.end(), o.cleaned.begin(), o.cleaned.end());
    }
    if (cleaned.empty()) continue;
    const auto report = verify_purity(cleaned);
    EXPECT_EQ(report.rho, 0.0) << seed;
    EXPECT_EQ(report.tau_avg, 0.0) << seed;
  }
}

TEST(VerifyPurity, RetainedExplicitTiesCarryEntropy) {
  // A=B by explicit tie verdicts, both beat C. Already acyclic, so every
  // judgment survives, but the tied pair keeps tau at 1 / log2(3).
  std::vector<Judgment> js;
  add_pair(js, "q", "A", "B", T, T);
  add_win(js, "q", "A", "C");
  add_win(js, "q", "B", "C");
  const auto out = purify_question("q", js);
  EXPECT_EQ(out.cleaned.size(), 6u);
  try {
    verify_purity(out.cleaned);
    FAIL();
  } catch (const PurityViolation& e) {
    EXPECT_EQ(e.rho(), 0.0);
    EXPECT_NEAR(e.tau_avg(), 1.0 / std::log2(3.0), 1e-15);
    EXPECT_EQ(e.question_ids(), (std::vector<std::string>{"q"}));
  }
}

}  // namespace
}  // namespace prefgraph
