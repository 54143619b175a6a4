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

#include "prefgraph/purify.h"

#include <utility>

#include "prefgraph/entropy.h"
#include "prefgraph/error.h"
#include "prefgraph/parallel.h"

namespace prefgraph {

std::vector<Relation> reconstruct_scc(const TournamentGraph& graph,
                                      const SccComponent& component) {
  std::vector<Relation> out;
  const auto& m = component.members;
  const auto& ids = graph.vertices();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const std::size_t da = graph.in_degree(m[a]);
      const std::size_t db = graph.in_degree(m[b]);
      if (da > db) {
        out.push_back(Relation::directed(ids[m[a]], ids[m[b]]));
      } else if (db > da) {
        out.push_back(Relation::directed(ids[m[b]], ids[m[a]]));
      } else {
        out.push_back(Relation::bidirectional(ids[m[a]], ids[m[b]]));
      }
    }
  }
  return out;
}

TournamentGraph build_global_dag(const TournamentGraph& graph) {
  if (!graph.is_complete()) {
    throw Error(ErrorCode::kIncompleteGraph,
                "question " + graph.question_id() + " has " +
                    std::to_string(graph.relation_count()) + " of " +
                    std::to_string(graph.pair_count()) + " pairs");
  }
  const SccDecomposition scc = tarjan_scc(graph);
  TournamentGraph dag = graph;
  for (const SccComponent& comp : scc.components) {
    if (comp.is_singleton()) continue;
    // Ranking reads degrees from `graph`, so rewriting `dag` in place is safe.
    for (const Relation& r : reconstruct_scc(graph, comp)) {
      const std::size_t a = dag.index_of(r.a);
      const std::size_t b = dag.index_of(r.b);
      if (r.is_directed()) {
        dag.set_winner(a, b);
      } else {
        dag.set_tie(a, b);
      }
    }
  }
  return dag;
}

CanonicalRelations::CanonicalRelations(const TournamentGraph& dag) : dag_(dag) {}

CanonicalRelations canonical_relations(const TournamentGraph& dag) {
  return CanonicalRelations(dag);
}

std::optional<CanonicalRelation> CanonicalRelations::lookup(
    std::string_view x, std::string_view y) const {
  auto i = dag_.find(x);
  auto j = dag_.find(y);
  if (!i || !j || *i == *j || !dag_.has_relation(*i, *j)) return std::nullopt;
  if (*j < *i) std::swap(i, j);
  CanonicalRelation rel;
  rel.a = dag_.vertices()[*i];
  rel.b = dag_.vertices()[*j];
  switch (dag_.cell(*i, *j)) {
    case TournamentGraph::Cell::kRowWins:
      rel.outcome = CanonicalRelation::Outcome::kWin;
      rel.winner = rel.a;
      break;
    case TournamentGraph::Cell::kColWins:
      rel.outcome = CanonicalRelation::Outcome::kWin;
      rel.winner = rel.b;
      break;
    default:
      rel.outcome = CanonicalRelation::Outcome::kTie;
      break;
  }
  return rel;
}

bool CanonicalRelations::matches(std::string_view first,
                                 std::string_view second,
                                 Verdict verdict) const {
  auto f = dag_.find(first);
  auto s = dag_.find(second);
  if (!f || !s || *f == *s || !dag_.has_relation(*f, *s)) {
    throw Error(ErrorCode::kUncoveredPair,
                "(" + std::string(first) + ", " + std::string(second) +
                    ") in question " + dag_.question_id());
  }
  switch (dag_.cell(*f, *s)) {
    case TournamentGraph::Cell::kRowWins:
      return verdict == Verdict::kFirstWins;
    case TournamentGraph::Cell::kColWins:
      return verdict == Verdict::kSecondWins;
    default:
      return verdict == Verdict::kTie;
  }
}

std::vector<CanonicalRelation> CanonicalRelations::entries() const {
  std::vector<CanonicalRelation> out;
  out.reserve(size());
  const auto& ids = dag_.vertices();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (auto rel = lookup(ids[i], ids[j])) out.push_back(std::move(*rel));
    }
  }
  return out;
}

SplitResult split_dataset(std::span<const Judgment> judgments,
                          const CanonicalRelations& canonical) {
  SplitResult out;
  for (const Judgment& j : judgments) {
    if (canonical.matches(j.first, j.second, j.verdict)) {
      out.cleaned.push_back(j);
    } else {
      out.discarded.push_back(j);
    }
  }
  return out;
}

double FilterOutcome::retention() const {
  if (input_count() == 0) return 1.0;
  return 1.0 - static_cast<double>(discarded.size()) /
                   static_cast<double>(input_count());
}

namespace {

FilterOutcome filter_complete(const std::string& question_id,
                              const TournamentGraph& graph,
                              std::span<const Judgment> judgments) {
  TournamentGraph dag = build_global_dag(graph);
  CanonicalRelations canonical(dag);
  SplitResult split = split_dataset(judgments, canonical);
  return FilterOutcome{question_id, std::move(dag), canonical.entries(),
                       std::move(split.cleaned), std::move(split.discarded)};
}

}  // namespace

FilterOutcome purify_question(std::string_view question_id,
                              std::span<const Judgment> judgments) {
  BuiltTournament built = build_tournament(question_id, judgments);
  if (!built.missing_swaps.empty()) {
    throw Error(ErrorCode::kIncompleteGraph,
                "question " + std::string(question_id) + " has " +
                    std::to_string(built.missing_swaps.size()) +
                    " pair(s) without a swapped order");
  }
  return filter_complete(std::string(question_id), built.graph, judgments);
}

CorpusFilter purify_corpus(std::span<const Judgment> judgments,
                           std::size_t threads) {
  auto grouped = group_by_question(judgments);
  std::vector<const std::pair<const std::string, std::vector<Judgment>>*>
      questions;
  for (const auto& entry : grouped) questions.push_back(&entry);

  std::vector<std::optional<FilterOutcome>> slots(questions.size());
  parallel_for(questions.size(), threads, [&](std::size_t i) {
    const auto& [qid, records] = *questions[i];
    BuiltTournament built = build_tournament(qid, records);
    if (!built.missing_swaps.empty() || !built.graph.is_complete()) return;
    slots[i] = filter_complete(qid, built.graph, records);
  });

  CorpusFilter out;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    if (slots[i]) {
      out.outcomes.push_back(std::move(*slots[i]));
    } else {
      out.skipped.push_back(questions[i]->first);
      out.skipped_judgments += questions[i]->second.size();
    }
  }
  return out;
}

PurityReport verify_purity(std::span<const Judgment> cleaned,
                           std::size_t threads) {
  if (cleaned.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no cleaned judgments to verify");
  }
  auto grouped = group_by_question(cleaned);
  std::vector<const std::pair<const std::string, std::vector<Judgment>>*>
      questions;
  for (const auto& entry : grouped) questions.push_back(&entry);

  struct PerQuestion {
    std::size_t vertices = 0;
    std::size_t non_transitive = 0;
    double tau = 0.0;
  };
  std::vector<PerQuestion> stats(questions.size());
  parallel_for(questions.size(), threads, [&](std::size_t i) {
    const auto& [qid, records] = *questions[i];
    // Pairs with a single surviving order are dropped by build_tournament.
    const TournamentGraph g = build_tournament(qid, records).graph;
    const SccDecomposition scc = analyze_scc(g);
    stats[i] = {g.size(), non_transitive_vertex_count(scc),
                entropy_report(g, scc).tau};
  });

  std::size_t vertices = 0;
  std::size_t non_transitive = 0;
  double tau_sum = 0.0;
  std::vector<std::string> offending;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    vertices += stats[i].vertices;
    non_transitive += stats[i].non_transitive;
    tau_sum += stats[i].tau;
    if (stats[i].non_transitive != 0 || stats[i].tau != 0.0) {
      offending.push_back(questions[i]->first);
    }
  }
  PurityReport report;
  report.questions = stats.size();
  report.rho = vertices == 0 ? 0.0
                             : static_cast<double>(non_transitive) /
                                   static_cast<double>(vertices);
  report.tau_avg = tau_sum / static_cast<double>(stats.size());
  if (!offending.empty()) {
    throw PurityViolation(std::move(offending), report.rho, report.tau_avg);
  }
  return report;
}

}  // namespace prefgraph
