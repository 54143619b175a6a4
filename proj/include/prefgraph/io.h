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

// On-disk formats. All files are UTF-8 with LF line endings and keys in a
// fixed order.
//
//   questions.jsonl   {"question_id", "instruction"}
//   responses.jsonl   {"question_id", "model_id", "response"}
//   judgments.jsonl   {"question_id", "first", "second", "verdict", "source"?}
//                     verdict is "first", "second" or "tie"
//   cleaned.jsonl, discarded.jsonl   judgment schema
//   report.json       see split_report()

#ifndef PREFGRAPH_IO_H_
#define PREFGRAPH_IO_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "prefgraph/entropy.h"
#include "prefgraph/graph.h"
#include "prefgraph/purify.h"

namespace prefgraph {

using OrderedJson = nlohmann::ordered_json;

// Calls fn(line_number, object) for every non-blank line; line numbers are
// 1-based. Throws ParseError for invalid JSON or a non-object line.
void for_each_json_line(
    std::istream& in,
    const std::function<void(std::size_t, const nlohmann::json&)>& fn);

// Throws Error(kBadVerdict).
Verdict parse_verdict_token(std::string_view token);

// One line without the trailing newline.
std::string serialize_judgment(const Judgment& judgment);
void write_judgments(std::ostream& out, std::span<const Judgment> judgments);

// Blank lines are skipped. Throws ParseError carrying the 1-based line
// number: kParseError for malformed records, kBadVerdict for an unknown
// verdict token, kDuplicateJudgment for a repeated (question, first, second).
std::vector<Judgment> parse_judgments(std::istream& in);

struct Question {
  std::string question_id;
  std::string instruction;
};

struct Response {
  std::string question_id;
  std::string model_id;
  std::string text;
};

struct CorpusManifest {
  std::string dataset_name;
  std::vector<Question> questions;
  std::map<std::pair<std::string, std::string>, std::string> responses;
  std::filesystem::path judgments_path;
};

std::vector<Question> parse_questions(std::istream& in);
std::vector<Response> parse_responses(std::istream& in);
void write_questions(std::ostream& out, std::span<const Question> questions);
void write_responses(std::ostream& out, std::span<const Response> responses);

// Reads questions.jsonl and responses.jsonl from `dir` (either may be
// absent); the dataset name is the directory name.
CorpusManifest load_manifest(const std::filesystem::path& dir);

// Throws Error(kInvalidJudgment) naming the first judgment that refers to an
// unknown question or response. Checks are skipped for a manifest section
// that is empty.
void validate_against_manifest(const CorpusManifest& manifest,
                               std::span<const Judgment> judgments);

// Throws Error(kIoError) with the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
std::vector<Judgment> read_judgments(const std::filesystem::path& path);

// Deterministic graph dump (vertices, relations, completeness).
OrderedJson graph_to_json(const TournamentGraph& graph);

// report.json body: `header` first, then corpus metrics, per-question
// figures and retention. `input_clarity` covers the processed questions.
OrderedJson split_report(const OrderedJson& header, const CorpusFilter& filter,
                         double input_rho, const CorpusClarity& input_clarity,
                         const OrderedJson& cleaned_purity);

// Writes cleaned.jsonl, discarded.jsonl and report.json into `dir`,
// creating it if needed.
void write_split(const CorpusFilter& filter, const OrderedJson& report,
                 const std::filesystem::path& dir);

// JSON text with two-space indent and a trailing newline.
std::string dump_json(const OrderedJson& doc);

}  // namespace prefgraph

#endif  // PREFGRAPH_IO_H_
