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

#include "prefgraph/analysis.h"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "prefgraph/error.h"
#include "prefgraph/parallel.h"
#include "prefgraph/scc.h"

namespace prefgraph {

CorpusAnalysis analyze_corpus(std::span<const Judgment> judgments,
                              std::size_t threads) {
  auto grouped = group_by_question(judgments);
  std::vector<const std::pair<const std::string, std::vector<Judgment>>*>
      questions;
  for (const auto& entry : grouped) questions.push_back(&entry);

  struct Slot {
    QuestionAnalysis summary;
    std::optional<TournamentGraph> graph;
    std::optional<EntropyReport> entropy;
  };
  std::vector<Slot> slots(questions.size());
  parallel_for(questions.size(), threads, [&](std::size_t i) {
    const auto& [qid, records] = *questions[i];
    BuiltTournament built = build_tournament(qid, records);
    Slot& slot = slots[i];
    QuestionAnalysis& s = slot.summary;
    s.question_id = qid;
    s.n = built.graph.size();
    s.missing_swaps = built.missing_swaps.size();
    s.complete = built.missing_swaps.empty() && built.graph.is_complete();

    const SccDecomposition scc = analyze_scc(built.graph);
    s.components = scc.count();
    for (const auto& c : scc.components) {
      s.largest_component = std::max(s.largest_component, c.size());
      if (c.is_non_transitive()) {
        ++s.non_transitive_components;
        s.non_transitive_vertices += c.size();
      }
    }
    EntropyReport entropy = entropy_report(built.graph, scc);
    s.h2 = entropy.h2;
    s.tau = entropy.tau;
    if (s.complete) {
      slot.entropy = std::move(entropy);
      slot.graph = std::move(built.graph);
    }
  });

  CorpusAnalysis out;
  std::size_t vertices = 0;
  std::size_t non_transitive = 0;
  double tau_sum = 0.0;
  for (Slot& slot : slots) {
    out.questions.push_back(slot.summary);
    if (!slot.graph) {
      out.incomplete.push_back(slot.summary.question_id);
      continue;
    }
    vertices += slot.summary.n;
    non_transitive += slot.summary.non_transitive_vertices;
    tau_sum += slot.entropy->tau;
    out.clarity.per_question.push_back(std::move(*slot.entropy));
    out.graphs.push_back(std::move(*slot.graph));
  }
  if (out.graphs.empty() || vertices == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "no complete question graphs");
  }
  out.rho = static_cast<double>(non_transitive) / static_cast<double>(vertices);
  out.clarity.tau_avg = tau_sum / static_cast<double>(out.graphs.size());
  return out;
}

OrderedJson analysis_to_json(const OrderedJson& header,
                             const CorpusAnalysis& analysis) {
  OrderedJson doc = header;
  doc["questions"] = analysis.questions.size();
  doc["analyzed"] = analysis.graphs.size();
  doc["rho"] = analysis.rho;
  doc["tau_avg"] = analysis.clarity.tau_avg;
  doc["incomplete"] = analysis.incomplete;
  OrderedJson per = OrderedJson::array();
  for (const auto& q : analysis.questions) {
    OrderedJson row;
    row["question_id"] = q.question_id;
    row["n"] = q.n;
    row["complete"] = q.complete;
    row["missing_swaps"] = q.missing_swaps;
    row["components"] = q.components;
    row["non_transitive_components"] = q.non_transitive_components;
    row["non_transitive_vertices"] = q.non_transitive_vertices;
    row["largest_component"] = q.largest_component;
    row["h2"] = q.h2;
    row["tau"] = q.tau;
    per.push_back(std::move(row));
  }
  doc["per_question"] = std::move(per);
  return doc;
}

std::string analysis_table(const CorpusAnalysis& analysis) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %5s %5s %6s %6s %10s %8s\n",
                "question", "n", "sccs", "nt-scc", "nt-v", "H2", "tau");
  out += line;
  for (const auto& q : analysis.questions) {
    std::snprintf(line, sizeof line, "%-16s %5zu %5zu %6zu %6zu %10.6f %8.6f%s\n",
                  q.question_id.c_str(), q.n, q.components,
                  q.non_transitive_components, q.non_transitive_vertices, q.h2,
                  q.tau, q.complete ? "" : "  (incomplete, excluded)");
    out += line;
  }
  std::snprintf(line, sizeof line,
                "\nquestions %zu  analyzed %zu  rho %.6f  tau_avg %.6f\n",
                analysis.questions.size(), analysis.graphs.size(),
                analysis.rho, analysis.clarity.tau_avg);
  out += line;
  return out;
}

}  // namespace prefgraph
