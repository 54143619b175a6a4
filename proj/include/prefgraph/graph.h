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

// Judgment records and per-question tournament graphs.
//
// Edges point from loser to winner, so a vertex's in-degree counts its wins.
// A tie (or a position-swap disagreement) is stored as a bidirectional
// relation, which expands to one arc in each direction.

#ifndef PREFGRAPH_GRAPH_H_
#define PREFGRAPH_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prefgraph {

enum class Verdict : std::uint8_t { kFirstWins, kSecondWins, kTie };

// FirstWins <-> SecondWins; Tie is its own mirror.
Verdict mirror(Verdict v);

std::string_view verdict_name(Verdict v);

struct Judgment {
  std::string question_id;
  std::string first;   // response shown first in the prompt
  std::string second;  // response shown second
  Verdict verdict = Verdict::kTie;
  std::optional<std::string> source;

  bool operator==(const Judgment&) const = default;
};

// One relation per unordered vertex pair.
struct Relation {
  enum class Kind : std::uint8_t { kDirected, kBidirectional };

  Kind kind = Kind::kBidirectional;
  // kDirected: `a` is the winner and `b` the loser (arc b -> a).
  // kBidirectional: a < b lexicographically.
  std::string a;
  std::string b;

  static Relation directed(std::string winner, std::string loser);
  static Relation bidirectional(std::string x, std::string y);

  bool is_directed() const { return kind == Kind::kDirected; }

  auto operator<=>(const Relation&) const = default;
};

// Bidirectional edges add one to each endpoint's in-degree.
inline constexpr std::size_t kBidirectionalInDegreeContribution = 1;

// Result of merging the two prompt orders of a pair (a_j, a_k).
enum class PairOutcome : std::uint8_t { kJWins, kKWins, kBidirectional };

// `v_jk` is the verdict with a_j shown first, `v_kj` with a_k shown first.
PairOutcome combine_ordered_verdicts(Verdict v_jk, Verdict v_kj);

class TournamentGraph {
 public:
  enum class Cell : std::uint8_t { kAbsent, kRowWins, kColWins, kTie };

  TournamentGraph() = default;
  // `vertices` must be unique; they are sorted on construction.
  TournamentGraph(std::string question_id, std::vector<std::string> vertices);

  static TournamentGraph from_relations(std::string question_id,
                                        std::vector<std::string> vertices,
                                        std::span<const Relation> relations);

  const std::string& question_id() const { return question_id_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  // Throws Error(kUnknownVertex).
  std::size_t index_of(std::string_view id) const;

  Cell cell(std::size_t row, std::size_t col) const {
    return cells_[row * size() + col];
  }
  bool has_relation(std::size_t i, std::size_t j) const {
    return cell(i, j) != Cell::kAbsent;
  }
  // Arc from -> to exists iff `to` beats `from` or the pair is tied.
  bool has_arc(std::size_t from, std::size_t to) const {
    Cell c = cell(from, to);
    return c == Cell::kColWins || c == Cell::kTie;
  }

  void set_winner(std::size_t winner, std::size_t loser);
  void set_tie(std::size_t i, std::size_t j);
  void clear(std::size_t i, std::size_t j);

  std::size_t in_degree(std::size_t v) const { return in_degree_[v]; }
  std::size_t out_degree(std::size_t v) const { return out_degree_[v]; }

  std::size_t relation_count() const { return directed_ + bidirectional_; }
  std::size_t directed_count() const { return directed_; }
  std::size_t bidirectional_count() const { return bidirectional_; }
  std::size_t pair_count() const { return size() * (size() - (size() ? 1 : 0)) / 2; }
  bool is_complete() const { return relation_count() == pair_count(); }

  // Relations in (i, j), i < j, vertex order.
  std::vector<Relation> relations() const;
  // Out-arcs per vertex with bidirectional relations expanded.
  std::vector<std::vector<std::size_t>> adjacency() const;

  bool operator==(const TournamentGraph&) const = default;

 private:
  void drop(std::size_t i, std::size_t j);
  Cell& at(std::size_t row, std::size_t col) {
    return cells_[row * size() + col];
  }

  std::string question_id_;
  std::vector<std::string> vertices_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> out_degree_;
  std::size_t directed_ = 0;
  std::size_t bidirectional_ = 0;
};

// Throws Error(kUnknownVertex) for ids not in the graph.
std::size_t in_degree(const TournamentGraph& graph, std::string_view v);
std::size_t out_degree(const TournamentGraph& graph, std::string_view v);

struct BuiltTournament {
  TournamentGraph graph;
  // Unordered pairs (lexicographic) for which only one prompt order exists.
  std::vector<std::pair<std::string, std::string>> missing_swaps;
  // Fewer than two vertices.
  bool degenerate = false;
};

// Throws Error(kDuplicateJudgment) on a repeated ordered record,
// Error(kQuestionMismatch) when a record belongs to another question and
// Error(kInvalidJudgment) when first == second. Pairs missing one prompt
// order are left out of the graph and reported in `missing_swaps`.
BuiltTournament build_tournament(std::string_view question_id,
                                 std::span<const Judgment> judgments);

// Judgments grouped per question, keyed (and therefore ordered) by id.
std::map<std::string, std::vector<Judgment>> group_by_question(
    std::span<const Judgment> judgments);

}  // namespace prefgraph

#endif  // PREFGRAPH_GRAPH_H_
