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

#include "prefgraph/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "prefgraph/error.h"

namespace prefgraph {
namespace {

std::string padded(std::string_view prefix, std::size_t index,
                   std::size_t count, std::size_t min_width) {
  std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  width = std::max(width, min_width);
  std::string digits = std::to_string(index);
  return std::string(prefix) + std::string(width - digits.size(), '0') + digits;
}

bool is_rate(double r) { return std::isfinite(r) && r >= 0.0 && r <= 1.0; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string synth_model_id(std::size_t index, std::size_t n_models) {
  return padded("model_", index, n_models, 2);
}

std::string synth_question_id(std::size_t index, std::size_t n_questions) {
  return padded("q", index, n_questions, 4);
}

void validate(const SynthSpec& spec) {
  if (spec.n_models < 2) {
    throw Error(ErrorCode::kBadSpec, "need at least 2 models");
  }
  if (spec.n_questions < 1) {
    throw Error(ErrorCode::kBadSpec, "need at least 1 question");
  }
  if (!is_rate(spec.cycle_rate) || !is_rate(spec.tie_rate)) {
    throw Error(ErrorCode::kBadSpec, "rates must lie in [0, 1]");
  }
}

SynthCorpus gen_corpus(const SynthSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n_models;
  std::vector<std::string> models(n);
  for (std::size_t m = 0; m < n; ++m) models[m] = synth_model_id(m, n);

  SynthCorpus corpus;
  corpus.graphs.reserve(spec.n_questions);
  corpus.judgments.reserve(spec.n_questions * n * (n - 1));
  for (std::size_t q = 0; q < spec.n_questions; ++q) {
    const std::string qid = synth_question_id(q, spec.n_questions);
    std::mt19937_64 rng(mix_seed(spec.seed, q));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);

    // hidden_rank[m]: higher is better.
    std::vector<std::size_t> hidden_rank(n);
    std::iota(hidden_rank.begin(), hidden_rank.end(), 0);
    std::shuffle(hidden_rank.begin(), hidden_rank.end(), rng);

    TournamentGraph graph(qid, models);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double u = unit(rng);
        Verdict i_first;  // verdict with models[i] shown first
        Verdict j_first;
        if (u < spec.tie_rate) {
          graph.set_tie(i, j);
          if (spec.tie_verdicts) {
            i_first = j_first = Verdict::kTie;
          } else {
            i_first = j_first = coin(rng) ? Verdict::kFirstWins
                                          : Verdict::kSecondWins;
          }
        } else {
          const bool flipped = unit(rng) < spec.cycle_rate;
          const bool i_better = hidden_rank[i] > hidden_rank[j];
          const bool i_wins = flipped != i_better;
          if (i_wins) {
            graph.set_winner(i, j);
            i_first = Verdict::kFirstWins;
            j_first = Verdict::kSecondWins;
          } else {
            graph.set_winner(j, i);
            i_first = Verdict::kSecondWins;
            j_first = Verdict::kFirstWins;
          }
        }
        corpus.judgments.push_back({qid, models[i], models[j], i_first, {}});
        corpus.judgments.push_back({qid, models[j], models[i], j_first, {}});
      }
    }
    corpus.questions.push_back(
        {qid, "Synthetic instruction " + std::to_string(q) + "."});
    for (const auto& m : models) {
      corpus.responses.push_back(
          {qid, m, "Synthetic response of " + m + " to " + qid + "."});
    }
    corpus.graphs.push_back(std::move(graph));
  }
  return corpus;
}

TournamentGraph random_graph(const RandomGraphSpec& spec, std::uint64_t seed) {
  std::vector<std::string> ids(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) ids[i] = "v" + std::to_string(i);
  TournamentGraph g("random", ids);
  std::mt19937_64 rng(mix_seed(seed, 0x5eed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      const double u = unit(rng);
      if (u < spec.missing_rate) continue;
      if (u < spec.missing_rate + spec.tie_rate) {
        g.set_tie(i, j);
      } else if (unit(rng) < 0.5) {
        g.set_winner(i, j);
      } else {
        g.set_winner(j, i);
      }
    }
  }
  return g;
}

}  // namespace prefgraph
