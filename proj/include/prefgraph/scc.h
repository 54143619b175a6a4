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

#ifndef PREFGRAPH_SCC_H_
#define PREFGRAPH_SCC_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prefgraph/graph.h"

namespace prefgraph {

enum class SccClass { kTransitive, kNonTransitive };

struct SccComponent {
  std::vector<std::size_t> members;  // vertex indices, ascending
  bool is_all_ties = false;          // every internal pair bidirectional
  std::optional<SccClass> classification;

  std::size_t size() const { return members.size(); }
  bool is_singleton() const { return members.size() == 1; }
  bool is_non_transitive() const {
    return classification == SccClass::kNonTransitive;
  }

  bool operator==(const SccComponent&) const = default;
};

struct SccDecomposition {
  // Ordered by smallest member.
  std::vector<SccComponent> components;
  std::vector<std::size_t> component_of;  // vertex index -> component index

  std::size_t count() const { return components.size(); }
};

// Iterative Tarjan over the expanded arc set. Components come back
// unclassified; `is_all_ties` is filled in.
SccDecomposition tarjan_scc(const TournamentGraph& graph);

// A component is non-transitive iff it has more than two members and some
// internal pair is not bidirectional (a missing pair counts as not
// bidirectional).
SccDecomposition classify_components(const TournamentGraph& graph,
                                     SccDecomposition decomposition);

// tarjan_scc followed by classify_components.
SccDecomposition analyze_scc(const TournamentGraph& graph);

// Number of vertices inside non-transitive components.
std::size_t non_transitive_vertex_count(const SccDecomposition& decomposition);

// True iff the component graph has no cycle.
bool condensation_is_acyclic(const TournamentGraph& graph,
                             const SccDecomposition& decomposition);

// Fraction of all vertices (summed over graphs) that sit in non-transitive
// components. Throws Error(kEmptyCorpus) when there are no vertices.
double non_transitivity_ratio(std::span<const TournamentGraph> graphs,
                              std::size_t threads = 1);

}  // namespace prefgraph

#endif  // PREFGRAPH_SCC_H_
