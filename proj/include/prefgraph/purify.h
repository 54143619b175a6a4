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

// Cycle removal and judgment filtering.
//
// Every multi-vertex SCC is rebuilt from scratch: its internal relations are
// dropped and each internal pair is re-decided by comparing the two
// vertices' in-degrees in the original graph (higher wins, equal ties).
// Inter-component relations are kept as they are. The resulting graph has
// no directed cycle, and its relations become the canonical outcome against
// which every ordered judgment is checked.

#ifndef PREFGRAPH_PURIFY_H_
#define PREFGRAPH_PURIFY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefgraph/graph.h"
#include "prefgraph/scc.h"

namespace prefgraph {

struct CanonicalRelation {
  enum class Outcome { kWin, kTie };

  std::string a;  // a < b
  std::string b;
  Outcome outcome = Outcome::kTie;
  std::string winner;  // set iff outcome == kWin; one of a, b

  bool operator==(const CanonicalRelation&) const = default;
};

// Canonical outcome for every pair of one question's vertices.
class CanonicalRelations {
 public:
  explicit CanonicalRelations(const TournamentGraph& dag);

  const std::string& question_id() const { return dag_.question_id(); }
  // nullopt when either id is unknown or the pair has no relation.
  std::optional<CanonicalRelation> lookup(std::string_view x,
                                          std::string_view y) const;
  // Does `verdict` on the ordered (first, second) prompt agree with the
  // canonical outcome? Throws Error(kUncoveredPair) if the pair is absent.
  bool matches(std::string_view first, std::string_view second,
               Verdict verdict) const;
  std::vector<CanonicalRelation> entries() const;
  std::size_t size() const { return dag_.relation_count(); }

 private:
  TournamentGraph dag_;
};

struct SplitResult {
  std::vector<Judgment> cleaned;
  std::vector<Judgment> discarded;
};

struct FilterOutcome {
  std::string question_id;
  TournamentGraph dag;
  std::vector<CanonicalRelation> canonical;
  std::vector<Judgment> cleaned;
  std::vector<Judgment> discarded;

  std::size_t input_count() const { return cleaned.size() + discarded.size(); }
  // 1 - |discarded| / |input|; 1 for an empty question.
  double retention() const;
};

// Relations replacing the internal ones of `component`, ranked by
// full-graph in-degree. Empty for singletons.
std::vector<Relation> reconstruct_scc(const TournamentGraph& graph,
                                      const SccComponent& component);

// Throws Error(kIncompleteGraph) unless `graph` is a complete tournament.
TournamentGraph build_global_dag(const TournamentGraph& graph);

CanonicalRelations canonical_relations(const TournamentGraph& dag);

// Partition by agreement with the canonical outcomes; input order is kept in
// both halves. A tie matches only a Tie verdict.
SplitResult split_dataset(std::span<const Judgment> judgments,
                          const CanonicalRelations& canonical);

// Full pipeline for one question. Throws Error(kIncompleteGraph) when a pair
// is missing or lacks its swapped order.
FilterOutcome purify_question(std::string_view question_id,
                              std::span<const Judgment> judgments);

struct CorpusFilter {
  std::vector<FilterOutcome> outcomes;  // sorted by question_id
  // Questions left out because their graph was incomplete.
  std::vector<std::string> skipped;
  std::size_t skipped_judgments = 0;
};

CorpusFilter purify_corpus(std::span<const Judgment> judgments,
                           std::size_t threads = 1);

struct PurityReport {
  double rho = 0.0;
  double tau_avg = 0.0;
  std::size_t questions = 0;
};

// Rebuilds one graph per question from the cleaned judgments, keeping only
// pairs whose two prompt orders both survived, and requires rho == 0 and
// tau_avg == 0. Throws PurityViolation naming the offending questions, or
// Error(kEmptyCorpus) for an empty input.
PurityReport verify_purity(std::span<const Judgment> cleaned,
                           std::size_t threads = 1);

}  // namespace prefgraph

#endif  // PREFGRAPH_PURIFY_H_
