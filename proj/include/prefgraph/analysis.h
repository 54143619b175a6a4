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

#ifndef PREFGRAPH_ANALYSIS_H_
#define PREFGRAPH_ANALYSIS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prefgraph/entropy.h"
#include "prefgraph/graph.h"
#include "prefgraph/io.h"

namespace prefgraph {

struct QuestionAnalysis {
  std::string question_id;
  std::size_t n = 0;
  bool complete = false;
  std::size_t missing_swaps = 0;
  std::size_t components = 0;
  std::size_t non_transitive_components = 0;
  std::size_t non_transitive_vertices = 0;
  std::size_t largest_component = 0;
  double h2 = 0.0;
  double tau = 0.0;
};

struct CorpusAnalysis {
  std::vector<QuestionAnalysis> questions;  // every question, by id
  std::vector<std::string> incomplete;      // excluded from the aggregates
  std::vector<TournamentGraph> graphs;      // complete graphs only
  double rho = 0.0;
  CorpusClarity clarity;
};

// SCC census and entropy for every question. Aggregates cover complete
// graphs only; throws Error(kEmptyCorpus) if there are none.
CorpusAnalysis analyze_corpus(std::span<const Judgment> judgments,
                              std::size_t threads = 1);

OrderedJson analysis_to_json(const OrderedJson& header,
                             const CorpusAnalysis& analysis);

// Fixed-width text table for terminals.
std::string analysis_table(const CorpusAnalysis& analysis);

}  // namespace prefgraph

#endif  // PREFGRAPH_ANALYSIS_H_
