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

#include "prefgraph/graph.h"

#include <algorithm>

#include "prefgraph/error.h"

namespace prefgraph {

Verdict mirror(Verdict v) {
  switch (v) {
    case Verdict::kFirstWins: return Verdict::kSecondWins;
    case Verdict::kSecondWins: return Verdict::kFirstWins;
    case Verdict::kTie: return Verdict::kTie;
  }
  return v;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kFirstWins: return "first";
    case Verdict::kSecondWins: return "second";
    case Verdict::kTie: return "tie";
  }
  return "tie";
}

Relation Relation::directed(std::string winner, std::string loser) {
  if (winner == loser) {
    throw Error(ErrorCode::kInvalidJudgment, "self relation on " + winner);
  }
  return Relation{Kind::kDirected, std::move(winner), std::move(loser)};
}

Relation Relation::bidirectional(std::string x, std::string y) {
  if (x == y) {
    throw Error(ErrorCode::kInvalidJudgment, "self relation on " + x);
  }
  if (y < x) std::swap(x, y);
  return Relation{Kind::kBidirectional, std::move(x), std::move(y)};
}

PairOutcome combine_ordered_verdicts(Verdict v_jk, Verdict v_kj) {
  if (v_jk == Verdict::kFirstWins && v_kj == Verdict::kSecondWins) {
    return PairOutcome::kJWins;
  }
  if (v_jk == Verdict::kSecondWins && v_kj == Verdict::kFirstWins) {
    return PairOutcome::kKWins;
  }
  return PairOutcome::kBidirectional;
}

TournamentGraph::TournamentGraph(std::string question_id,
                                 std::vector<std::string> vertices)
    : question_id_(std::move(question_id)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw Error(ErrorCode::kInvalidJudgment,
                "duplicate vertex in question " + question_id_);
  }
  const std::size_t n = vertices_.size();
  cells_.assign(n * n, Cell::kAbsent);
  in_degree_.assign(n, 0);
  out_degree_.assign(n, 0);
}

TournamentGraph TournamentGraph::from_relations(
    std::string question_id, std::vector<std::string> vertices,
    std::span<const Relation> relations) {
  TournamentGraph g(std::move(question_id), std::move(vertices));
  for (const Relation& r : relations) {
    std::size_t a = g.index_of(r.a);
    std::size_t b = g.index_of(r.b);
    if (r.is_directed()) {
      g.set_winner(a, b);
    } else {
      g.set_tie(a, b);
    }
  }
  return g;
}

std::optional<std::size_t> TournamentGraph::find(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t TournamentGraph::index_of(std::string_view id) const {
  if (auto idx = find(id)) return *idx;
  throw Error(ErrorCode::kUnknownVertex,
              "'" + std::string(id) + "' not in question " + question_id_);
}

void TournamentGraph::drop(std::size_t i, std::size_t j) {
  switch (cell(i, j)) {
    case Cell::kAbsent:
      return;
    case Cell::kRowWins:
      --in_degree_[i];
      --out_degree_[j];
      --directed_;
      break;
    case Cell::kColWins:
      --in_degree_[j];
      --out_degree_[i];
      --directed_;
      break;
    case Cell::kTie:
      in_degree_[i] -= kBidirectionalInDegreeContribution;
      in_degree_[j] -= kBidirectionalInDegreeContribution;
      out_degree_[i] -= kBidirectionalInDegreeContribution;
      out_degree_[j] -= kBidirectionalInDegreeContribution;
      --bidirectional_;
      break;
  }
  at(i, j) = Cell::kAbsent;
  at(j, i) = Cell::kAbsent;
}

void TournamentGraph::set_winner(std::size_t winner, std::size_t loser) {
  if (winner == loser) {
    throw Error(ErrorCode::kInvalidJudgment, "self loop on " + vertices_[winner]);
  }
  drop(winner, loser);
  at(winner, loser) = Cell::kRowWins;
  at(loser, winner) = Cell::kColWins;
  ++in_degree_[winner];
  ++out_degree_[loser];
  ++directed_;
}

void TournamentGraph::set_tie(std::size_t i, std::size_t j) {
  if (i == j) {
    throw Error(ErrorCode::kInvalidJudgment, "self loop on " + vertices_[i]);
  }
  drop(i, j);
  at(i, j) = Cell::kTie;
  at(j, i) = Cell::kTie;
  in_degree_[i] += kBidirectionalInDegreeContribution;
  in_degree_[j] += kBidirectionalInDegreeContribution;
  out_degree_[i] += kBidirectionalInDegreeContribution;
  out_degree_[j] += kBidirectionalInDegreeContribution;
  ++bidirectional_;
}

void TournamentGraph::clear(std::size_t i, std::size_t j) { drop(i, j); }

std::vector<Relation> TournamentGraph::relations() const {
  std::vector<Relation> out;
  out.reserve(relation_count());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      switch (cell(i, j)) {
        case Cell::kAbsent:
          break;
        case Cell::kRowWins:
          out.push_back(Relation::directed(vertices_[i], vertices_[j]));
          break;
        case Cell::kColWins:
          out.push_back(Relation::directed(vertices_[j], vertices_[i]));
          break;
        case Cell::kTie:
          out.push_back(Relation::bidirectional(vertices_[i], vertices_[j]));
          break;
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> TournamentGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(size());
  for (std::size_t u = 0; u < size(); ++u) {
    adj[u].reserve(out_degree_[u]);
    for (std::size_t v = 0; v < size(); ++v) {
      if (u != v && has_arc(u, v)) adj[u].push_back(v);
    }
  }
  return adj;
}

std::size_t in_degree(const TournamentGraph& graph, std::string_view v) {
  return graph.in_degree(graph.index_of(v));
}

std::size_t out_degree(const TournamentGraph& graph, std::string_view v) {
  return graph.out_degree(graph.index_of(v));
}

BuiltTournament build_tournament(std::string_view question_id,
                                 std::span<const Judgment> judgments) {
  std::vector<std::string> ids;
  ids.reserve(judgments.size() * 2);
  for (const Judgment& j : judgments) {
    if (j.question_id != question_id) {
      throw Error(ErrorCode::kQuestionMismatch,
                  "judgment for '" + j.question_id + "' passed to question '" +
                      std::string(question_id) + "'");
    }
    if (j.first == j.second) {
      throw Error(ErrorCode::kInvalidJudgment,
                  "response '" + j.first + "' compared with itself in " +
                      j.question_id);
    }
    ids.push_back(j.first);
    ids.push_back(j.second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  BuiltTournament built{TournamentGraph(std::string(question_id), ids), {},
                        ids.size() < 2};
  TournamentGraph& g = built.graph;
  const std::size_t n = g.size();

  // Verdict per ordered (first, second) slot.
  std::vector<std::optional<Verdict>> ordered(n * n);
  for (const Judgment& j : judgments) {
    std::size_t f = g.index_of(j.first);
    std::size_t s = g.index_of(j.second);
    auto& slot = ordered[f * n + s];
    if (slot) {
      throw Error(ErrorCode::kDuplicateJudgment,
                  "(" + j.question_id + ", " + j.first + ", " + j.second + ")");
    }
    slot = j.verdict;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const auto& ik = ordered[i * n + k];
      const auto& ki = ordered[k * n + i];
      if (!ik && !ki) continue;
      if (!ik || !ki) {
        built.missing_swaps.emplace_back(ids[i], ids[k]);
        continue;
      }
      switch (combine_ordered_verdicts(*ik, *ki)) {
        case PairOutcome::kJWins: g.set_winner(i, k); break;
        case PairOutcome::kKWins: g.set_winner(k, i); break;
        case PairOutcome::kBidirectional: g.set_tie(i, k); break;
      }
    }
  }
  return built;
}

std::map<std::string, std::vector<Judgment>> group_by_question(
    std::span<const Judgment> judgments) {
  std::map<std::string, std::vector<Judgment>> grouped;
  for (const Judgment& j : judgments) grouped[j.question_id].push_back(j);
  return grouped;
}

}  // namespace prefgraph
