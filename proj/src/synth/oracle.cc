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

#include "prefgraph/oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "prefgraph/error.h"

namespace prefgraph::oracle {
namespace {

using Matrix = std::vector<std::vector<bool>>;

// arc[u][v]: u loses to v, or u and v are tied.
Matrix arc_matrix(const TournamentGraph& graph) {
  const auto& ids = graph.vertices();
  if (ids.size() > kMaxVertices) {
    throw Error(ErrorCode::kOracleLimit,
                std::to_string(ids.size()) + " vertices exceeds oracle limit " +
                    std::to_string(kMaxVertices));
  }
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  Matrix arc(ids.size(), std::vector<bool>(ids.size(), false));
  for (const Relation& r : graph.relations()) {
    const std::size_t a = pos.at(r.a);
    const std::size_t b = pos.at(r.b);
    if (r.kind == Relation::Kind::kDirected) {
      arc[b][a] = true;  // loser -> winner
    } else {
      arc[a][b] = true;
      arc[b][a] = true;
    }
  }
  return arc;
}

Matrix boolean_square(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) out[i][j] = true;
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> partition(const Matrix& arc) {
  const std::size_t n = arc.size();
  Matrix reach = arc;
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (;;) {
    Matrix next = boolean_square(reach);
    if (next == reach) break;
    reach = std::move(next);
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> block;
    for (std::size_t j = i; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        block.push_back(j);
        placed[j] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

std::vector<std::vector<std::size_t>> brute_force_scc(
    const TournamentGraph& graph) {
  return partition(arc_matrix(graph));
}

double brute_force_entropy(const TournamentGraph& graph) {
  const Matrix arc = arc_matrix(graph);
  const std::size_t n = arc.size();
  const auto blocks = partition(arc);

  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t v : blocks[b]) block_of[v] = b;
  }
  std::vector<double> din(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (arc[u][v]) din[v] += 1.0;
    }
  }
  double vol_g = 0.0;
  for (double d : din) vol_g += d;
  if (vol_g == 0.0) return 0.0;

  double h = 0.0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    double vol_j = 0.0;
    for (std::size_t v : blocks[j]) vol_j += din[v];

    double g_j = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (block_of[u] == j) continue;
      const bool both_single =
          blocks[j].size() == 1 && blocks[block_of[u]].size() == 1;
      if (both_single) continue;
      for (std::size_t v : blocks[j]) {
        if (arc[u][v]) g_j += 1.0;
      }
    }
    if (g_j > 0.0 && vol_j > 0.0) {
      h -= (g_j / vol_g) * std::log2(vol_j / vol_g);
    }
    for (std::size_t v : blocks[j]) {
      if (din[v] > 0.0 && vol_j > 0.0) {
        h -= (vol_j / vol_g) * (din[v] / vol_j) * std::log2(din[v] / vol_j);
      }
    }
  }
  return h < 0.0 ? 0.0 : h;
}

double brute_force_tau(const TournamentGraph& graph) {
  const std::size_t n = graph.size();
  if (n <= 1) return 0.0;
  const double tau = brute_force_entropy(graph) / std::log2(static_cast<double>(n));
  return std::min(1.0, std::max(0.0, tau));
}

}  // namespace prefgraph::oracle
