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

#include "prefgraph/scc.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "prefgraph/error.h"
#include "prefgraph/parallel.h"

namespace prefgraph {
namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct Frame {
  std::size_t vertex;
  std::size_t next_succ;
};

}  // namespace

SccDecomposition tarjan_scc(const TournamentGraph& graph) {
  const std::size_t n = graph.size();
  const auto adj = graph.adjacency();

  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<Frame> call_stack;
  std::vector<std::vector<std::size_t>> found;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const std::size_t v = frame.vertex;
      if (frame.next_succ < adj[v].size()) {
        const std::size_t w = adj[v][frame.next_succ++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});  // invalidates `frame`
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }

      if (lowlink[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const std::size_t parent = call_stack.back().vertex;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccDecomposition out;
  out.component_of.assign(n, 0);
  out.components.reserve(found.size());
  for (std::size_t c = 0; c < found.size(); ++c) {
    SccComponent comp;
    comp.members = std::move(found[c]);
    comp.is_all_ties = true;
    for (std::size_t a = 0; a < comp.members.size() && comp.is_all_ties; ++a) {
      for (std::size_t b = a + 1; b < comp.members.size(); ++b) {
        if (graph.cell(comp.members[a], comp.members[b]) !=
            TournamentGraph::Cell::kTie) {
          comp.is_all_ties = false;
          break;
        }
      }
    }
    for (std::size_t v : comp.members) out.component_of[v] = c;
    out.components.push_back(std::move(comp));
  }
  return out;
}

SccDecomposition classify_components(const TournamentGraph& /*graph*/,
                                     SccDecomposition decomposition) {
  for (SccComponent& comp : decomposition.components) {
    comp.classification = (comp.size() > 2 && !comp.is_all_ties)
                              ? SccClass::kNonTransitive
                              : SccClass::kTransitive;
  }
  return decomposition;
}

SccDecomposition analyze_scc(const TournamentGraph& graph) {
  return classify_components(graph, tarjan_scc(graph));
}

std::size_t non_transitive_vertex_count(
    const SccDecomposition& decomposition) {
  std::size_t total = 0;
  for (const SccComponent& comp : decomposition.components) {
    if (comp.is_non_transitive()) total += comp.size();
  }
  return total;
}

bool condensation_is_acyclic(const TournamentGraph& graph,
                             const SccDecomposition& decomposition) {
  const std::size_t k = decomposition.count();
  std::vector<std::vector<std::size_t>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  const auto adj = graph.adjacency();
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (std::size_t v : adj[u]) {
      std::size_t cu = decomposition.component_of[u];
      std::size_t cv = decomposition.component_of[v];
      if (cu == cv) continue;
      succ[cu].push_back(cv);
      ++indegree[cv];
    }
  }
  // Kahn's algorithm: every component is emitted iff there is no cycle.
  std::vector<std::size_t> ready;
  for (std::size_t c = 0; c < k; ++c) {
    if (indegree[c] == 0) ready.push_back(c);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    std::size_t c = ready.back();
    ready.pop_back();
    ++emitted;
    for (std::size_t d : succ[c]) {
      if (--indegree[d] == 0) ready.push_back(d);
    }
  }
  return emitted == k;
}

double non_transitivity_ratio(std::span<const TournamentGraph> graphs,
                              std::size_t threads) {
  std::vector<std::size_t> numerators(graphs.size(), 0);
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    numerators[i] = non_transitive_vertex_count(analyze_scc(graphs[i]));
  });
  std::size_t numerator = std::accumulate(numerators.begin(), numerators.end(),
                                          std::size_t{0});
  std::size_t denominator = 0;
  for (const TournamentGraph& g : graphs) denominator += g.size();
  if (denominator == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "no vertices in corpus");
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace prefgraph
