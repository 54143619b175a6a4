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

#include "prefgraph/entropy.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "prefgraph/error.h"
#include "prefgraph/parallel.h"

namespace prefgraph {
namespace {

// p * log2(p) with the 0 log 0 = 0 convention.
double plogp(double num, double den) {
  if (num <= 0.0 || den <= 0.0) return 0.0;
  const double p = num / den;
  return p * std::log2(p);
}

}  // namespace

std::size_t scc_volume(const TournamentGraph& graph,
                       const SccDecomposition& decomposition,
                       std::size_t component) {
  std::size_t vol = 0;
  for (std::size_t v : decomposition.components.at(component).members) {
    vol += graph.in_degree(v);
  }
  return vol;
}

std::size_t external_influence(const TournamentGraph& graph,
                               const SccDecomposition& decomposition,
                               std::size_t component) {
  const SccComponent& target = decomposition.components.at(component);
  std::size_t g = 0;
  for (std::size_t v : target.members) {
    for (std::size_t u = 0; u < graph.size(); ++u) {
      if (u == v || !graph.has_arc(u, v)) continue;
      const std::size_t cu = decomposition.component_of[u];
      if (cu == component) continue;
      if (target.is_singleton() && decomposition.components[cu].is_singleton()) {
        continue;
      }
      ++g;
    }
  }
  return g;
}

EntropyReport entropy_report(const TournamentGraph& graph,
                             const SccDecomposition& decomposition) {
  EntropyReport r;
  r.question_id = graph.question_id();
  r.n = graph.size();
  r.component_count = decomposition.count();
  r.volumes.resize(r.component_count);
  r.g.resize(r.component_count);
  for (std::size_t j = 0; j < r.component_count; ++j) {
    r.volumes[j] = scc_volume(graph, decomposition, j);
    r.g[j] = external_influence(graph, decomposition, j);
    r.total_volume += r.volumes[j];
  }
  if (r.total_volume == 0) {
    r.edgeless = true;
    return r;
  }

  const double total = static_cast<double>(r.total_volume);
  double inter = 0.0;
  double intra = 0.0;
  for (std::size_t j = 0; j < r.component_count; ++j) {
    const double vol = static_cast<double>(r.volumes[j]);
    if (r.g[j] > 0 && r.volumes[j] > 0) {
      inter -= (static_cast<double>(r.g[j]) / total) * std::log2(vol / total);
    }
    double inner = 0.0;
    for (std::size_t v : decomposition.components[j].members) {
      inner += plogp(static_cast<double>(graph.in_degree(v)), vol);
    }
    intra -= (vol / total) * inner;
  }
  // Signed zeros from exact cancellation are normalised away.
  r.h2 = std::max(0.0, inter + intra);

  if (r.n > 1) {
    const double raw = r.h2 / std::log2(static_cast<double>(r.n));
    r.tau = std::clamp(raw, 0.0, 1.0);
    if (raw > 1.0) {
      r.clamped = true;
      std::cerr << "warning: tau clamped for question " << r.question_id
                << " (raw " << raw << ")\n";
    }
  }
  return r;
}

EntropyReport entropy_report(const TournamentGraph& graph) {
  return entropy_report(graph, tarjan_scc(graph));
}

double structural_entropy(const TournamentGraph& graph) {
  return entropy_report(graph).h2;
}

double normalized_entropy(const TournamentGraph& graph) {
  return entropy_report(graph).tau;
}

CorpusClarity average_normalized_entropy(
    std::span<const TournamentGraph> graphs, std::size_t threads) {
  if (graphs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no graphs to average");
  }
  CorpusClarity out;
  out.per_question.resize(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    out.per_question[i] = entropy_report(graphs[i]);
  });
  std::stable_sort(out.per_question.begin(), out.per_question.end(),
                   [](const EntropyReport& a, const EntropyReport& b) {
                     return a.question_id < b.question_id;
                   });
  double sum = 0.0;
  for (const EntropyReport& r : out.per_question) sum += r.tau;
  out.tau_avg = sum / static_cast<double>(out.per_question.size());
  return out;
}

}  // namespace prefgraph
