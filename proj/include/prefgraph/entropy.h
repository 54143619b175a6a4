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

// Two-dimensional structural entropy of a tournament graph, using its SCCs
// as the fixed partition.
//
//   H2 = - sum_j (g_j / vol(G)) log2(vol_j / vol(G))
//        - sum_j (vol_j / vol(G)) sum_{v in j} (d_in(v) / vol_j) log2(d_in(v) / vol_j)
//
// vol_j sums the full-graph in-degrees of component j. g_j counts arcs
// entering component j from outside it, ignoring arcs that join two
// singleton components. 0 log 0 is taken as 0 and terms with a zero
// denominator vanish. The normalized form is tau = H2 / log2(n), clamped to
// [0, 1], with tau = 0 for n <= 1.

#ifndef PREFGRAPH_ENTROPY_H_
#define PREFGRAPH_ENTROPY_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prefgraph/graph.h"
#include "prefgraph/scc.h"

namespace prefgraph {

struct EntropyReport {
  std::string question_id;
  std::size_t n = 0;
  double h2 = 0.0;   // bits
  double tau = 0.0;  // [0, 1]
  std::size_t component_count = 0;
  std::vector<std::size_t> volumes;  // per component
  std::vector<std::size_t> g;        // per component
  std::size_t total_volume = 0;
  bool edgeless = false;  // total_volume == 0, H2 forced to 0
  bool clamped = false;   // raw H2 / log2(n) fell outside [0, 1]
};

struct CorpusClarity {
  std::vector<EntropyReport> per_question;  // sorted by question_id
  double tau_avg = 0.0;
};

std::size_t scc_volume(const TournamentGraph& graph,
                       const SccDecomposition& decomposition,
                       std::size_t component);

std::size_t external_influence(const TournamentGraph& graph,
                               const SccDecomposition& decomposition,
                               std::size_t component);

EntropyReport entropy_report(const TournamentGraph& graph,
                             const SccDecomposition& decomposition);
EntropyReport entropy_report(const TournamentGraph& graph);

double structural_entropy(const TournamentGraph& graph);
double normalized_entropy(const TournamentGraph& graph);

// Mean tau over the corpus, summed in question_id order. Throws
// Error(kEmptyCorpus) on an empty span.
CorpusClarity average_normalized_entropy(
    std::span<const TournamentGraph> graphs, std::size_t threads = 1);

}  // namespace prefgraph

#endif  // PREFGRAPH_ENTROPY_H_
