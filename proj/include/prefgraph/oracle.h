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

// Brute-force reference implementations used to cross-check the production
// SCC and entropy code. They only read a graph's vertex list and relation
// list and share no algorithmic code with the production modules.

#ifndef PREFGRAPH_ORACLE_H_
#define PREFGRAPH_ORACLE_H_

#include <cstddef>
#include <vector>

#include "prefgraph/graph.h"

namespace prefgraph::oracle {

inline constexpr std::size_t kMaxVertices = 12;

// Partition by mutual reachability, computed by squaring the reflexive
// reachability matrix until it stops changing. Blocks hold vertex indices in
// ascending order and are ordered by smallest member. Throws
// Error(kOracleLimit) above kMaxVertices.
std::vector<std::vector<std::size_t>> brute_force_scc(
    const TournamentGraph& graph);

// Term-by-term evaluation of the two-dimensional structural entropy over
// brute_force_scc's partition.
double brute_force_entropy(const TournamentGraph& graph);

// brute_force_entropy / log2(n), 0 for n <= 1, clamped to [0, 1].
double brute_force_tau(const TournamentGraph& graph);

}  // namespace prefgraph::oracle

#endif  // PREFGRAPH_ORACLE_H_
