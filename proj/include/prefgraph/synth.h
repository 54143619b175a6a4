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

// Synthetic judgment corpora with tunable non-transitivity.
//
// Each question draws a hidden total order over the models. Every pair is
// bidirectional with probability tie_rate; otherwise it is reversed against
// the hidden order with probability cycle_rate. The relation is then
// expanded into its two position-swapped judgments.

#ifndef PREFGRAPH_SYNTH_H_
#define PREFGRAPH_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prefgraph/graph.h"
#include "prefgraph/io.h"

namespace prefgraph {

struct SynthSpec {
  std::size_t n_models = 5;
  std::size_t n_questions = 10;
  double cycle_rate = 0.0;
  double tie_rate = 0.0;
  std::uint64_t seed = 0;
  // false: a bidirectional pair is a position-bias disagreement (the same
  // slot wins in both prompt orders), as produced by a judge that may not
  // answer "tie". true: both prompt orders return an explicit Tie.
  bool tie_verdicts = false;
};

// Throws Error(kBadSpec).
void validate(const SynthSpec& spec);

struct SynthCorpus {
  std::vector<TournamentGraph> graphs;  // one per question, in id order
  std::vector<Judgment> judgments;
  std::vector<Question> questions;
  std::vector<Response> responses;
};

SynthCorpus gen_corpus(const SynthSpec& spec);

std::string synth_model_id(std::size_t index, std::size_t n_models);
std::string synth_question_id(std::size_t index, std::size_t n_questions);

// splitmix64 finaliser, used to derive per-question seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

struct RandomGraphSpec {
  std::size_t n = 5;
  double tie_rate = 0.0;      // probability a present pair is bidirectional
  double missing_rate = 0.0;  // probability a pair has no relation
};

// Uniformly random relations over vertices "v0".."v{n-1}"; deterministic
// for a given seed.
TournamentGraph random_graph(const RandomGraphSpec& spec, std::uint64_t seed);

}  // namespace prefgraph

#endif  // PREFGRAPH_SYNTH_H_
