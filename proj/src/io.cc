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

#include "prefgraph/io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "prefgraph/error.h"

namespace prefgraph {
namespace {

std::string required_string(const nlohmann::json& obj, const char* key,
                            std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(ErrorCode::kParseError, line_no,
                     std::string("missing string field '") + key + "'");
  }
  std::string value = it->get<std::string>();
  if (value.empty()) {
    throw ParseError(ErrorCode::kParseError, line_no,
                     std::string("field '") + key + "' is empty");
  }
  return value;
}

}  // namespace

void for_each_json_line(
    std::istream& in,
    const std::function<void(std::size_t, const nlohmann::json&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(ErrorCode::kParseError, line_no, e.what());
    }
    if (!obj.is_object()) {
      throw ParseError(ErrorCode::kParseError, line_no, "expected an object");
    }
    fn(line_no, obj);
  }
}

Verdict parse_verdict_token(std::string_view token) {
  if (token == "first") return Verdict::kFirstWins;
  if (token == "second") return Verdict::kSecondWins;
  if (token == "tie") return Verdict::kTie;
  throw Error(ErrorCode::kBadVerdict, "unknown verdict '" + std::string(token) +
                                          "' (expected first, second or tie)");
}

std::string serialize_judgment(const Judgment& judgment) {
  OrderedJson obj;
  obj["question_id"] = judgment.question_id;
  obj["first"] = judgment.first;
  obj["second"] = judgment.second;
  obj["verdict"] = verdict_name(judgment.verdict);
  if (judgment.source) obj["source"] = *judgment.source;
  return obj.dump();
}

void write_judgments(std::ostream& out, std::span<const Judgment> judgments) {
  for (const Judgment& j : judgments) out << serialize_judgment(j) << '\n';
}

std::vector<Judgment> parse_judgments(std::istream& in) {
  std::vector<Judgment> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for_each_json_line(in, [&](std::size_t line_no, const nlohmann::json& obj) {
    Judgment j;
    j.question_id = required_string(obj, "question_id", line_no);
    j.first = required_string(obj, "first", line_no);
    j.second = required_string(obj, "second", line_no);
    const std::string token = required_string(obj, "verdict", line_no);
    try {
      j.verdict = parse_verdict_token(token);
    } catch (const Error& e) {
      throw ParseError(ErrorCode::kBadVerdict, line_no, e.what());
    }
    if (auto it = obj.find("source"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) {
        throw ParseError(ErrorCode::kParseError, line_no,
                         "field 'source' must be a string");
      }
      j.source = it->get<std::string>();
    }
    if (j.first == j.second) {
      throw ParseError(ErrorCode::kParseError, line_no,
                       "first and second are both '" + j.first + "'");
    }
    if (!seen.emplace(j.question_id, j.first, j.second).second) {
      throw ParseError(ErrorCode::kDuplicateJudgment, line_no,
                       "(" + j.question_id + ", " + j.first + ", " + j.second +
                           ") already seen");
    }
    out.push_back(std::move(j));
  });
  return out;
}

std::vector<Question> parse_questions(std::istream& in) {
  std::vector<Question> out;
  for_each_json_line(in, [&](std::size_t line_no, const nlohmann::json& obj) {
    out.push_back({required_string(obj, "question_id", line_no),
                   required_string(obj, "instruction", line_no)});
  });
  return out;
}

std::vector<Response> parse_responses(std::istream& in) {
  std::vector<Response> out;
  for_each_json_line(in, [&](std::size_t line_no, const nlohmann::json& obj) {
    out.push_back({required_string(obj, "question_id", line_no),
                   required_string(obj, "model_id", line_no),
                   required_string(obj, "response", line_no)});
  });
  return out;
}

void write_questions(std::ostream& out, std::span<const Question> questions) {
  for (const auto& q : questions) {
    OrderedJson obj;
    obj["question_id"] = q.question_id;
    obj["instruction"] = q.instruction;
    out << obj.dump() << '\n';
  }
}

void write_responses(std::ostream& out, std::span<const Response> responses) {
  for (const auto& r : responses) {
    OrderedJson obj;
    obj["question_id"] = r.question_id;
    obj["model_id"] = r.model_id;
    obj["response"] = r.text;
    out << obj.dump() << '\n';
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::vector<Judgment> read_judgments(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_judgments(in);
}

CorpusManifest load_manifest(const std::filesystem::path& dir) {
  CorpusManifest m;
  m.dataset_name = std::filesystem::absolute(dir).lexically_normal()
                       .filename()
                       .string();
  if (m.dataset_name.empty()) {
    m.dataset_name = std::filesystem::absolute(dir)
                         .lexically_normal()
                         .parent_path()
                         .filename()
                         .string();
  }
  m.judgments_path = dir / "judgments.jsonl";
  if (auto q = dir / "questions.jsonl"; std::filesystem::exists(q)) {
    std::istringstream in(read_file(q));
    m.questions = parse_questions(in);
  }
  if (auto r = dir / "responses.jsonl"; std::filesystem::exists(r)) {
    std::istringstream in(read_file(r));
    for (auto& resp : parse_responses(in)) {
      m.responses[{resp.question_id, resp.model_id}] = std::move(resp.text);
    }
  }
  return m;
}

void validate_against_manifest(const CorpusManifest& manifest,
                               std::span<const Judgment> judgments) {
  std::set<std::string> questions;
  for (const auto& q : manifest.questions) questions.insert(q.question_id);
  for (const Judgment& j : judgments) {
    if (!questions.empty() && !questions.contains(j.question_id)) {
      throw Error(ErrorCode::kInvalidJudgment,
                  "judgment refers to unknown question '" + j.question_id + "'");
    }
    if (manifest.responses.empty()) continue;
    for (const std::string* model : {&j.first, &j.second}) {
      if (!manifest.responses.contains({j.question_id, *model})) {
        throw Error(ErrorCode::kInvalidJudgment,
                    "no response from '" + *model + "' for question '" +
                        j.question_id + "'");
      }
    }
  }
}

OrderedJson graph_to_json(const TournamentGraph& graph) {
  OrderedJson doc;
  doc["question_id"] = graph.question_id();
  doc["vertices"] = graph.vertices();
  doc["complete"] = graph.is_complete();
  OrderedJson rels = OrderedJson::array();
  for (const Relation& r : graph.relations()) {
    OrderedJson rel;
    if (r.is_directed()) {
      rel["kind"] = "directed";
      rel["winner"] = r.a;
      rel["loser"] = r.b;
    } else {
      rel["kind"] = "bidirectional";
      rel["a"] = r.a;
      rel["b"] = r.b;
    }
    rels.push_back(std::move(rel));
  }
  doc["relations"] = std::move(rels);
  return doc;
}

OrderedJson split_report(const OrderedJson& header, const CorpusFilter& filter,
                         double input_rho, const CorpusClarity& input_clarity,
                         const OrderedJson& cleaned_purity) {
  OrderedJson doc = header;
  std::size_t cleaned = 0;
  std::size_t discarded = 0;
  for (const auto& o : filter.outcomes) {
    cleaned += o.cleaned.size();
    discarded += o.discarded.size();
  }
  const std::size_t processed = cleaned + discarded;

  doc["questions"] = filter.outcomes.size();
  doc["rho"] = input_rho;
  doc["tau_avg"] = input_clarity.tau_avg;
  doc["cleaned_purity"] = cleaned_purity;
  OrderedJson counts;
  counts["input"] = processed;
  counts["cleaned"] = cleaned;
  counts["discarded"] = discarded;
  counts["skipped"] = filter.skipped_judgments;
  doc["judgments"] = std::move(counts);
  doc["retention"] =
      processed == 0 ? 1.0
                     : 1.0 - static_cast<double>(discarded) /
                                 static_cast<double>(processed);
  doc["skipped_questions"] = filter.skipped;

  std::map<std::string, const EntropyReport*> tau_by_question;
  for (const auto& r : input_clarity.per_question) {
    tau_by_question[r.question_id] = &r;
  }
  OrderedJson per = OrderedJson::array();
  for (const auto& o : filter.outcomes) {
    OrderedJson q;
    q["question_id"] = o.question_id;
    q["n"] = o.dag.size();
    if (auto it = tau_by_question.find(o.question_id);
        it != tau_by_question.end()) {
      q["h2"] = it->second->h2;
      q["tau"] = it->second->tau;
    }
    q["cleaned"] = o.cleaned.size();
    q["discarded"] = o.discarded.size();
    q["retention"] = o.retention();
    per.push_back(std::move(q));
  }
  doc["per_question"] = std::move(per);
  return doc;
}

void write_split(const CorpusFilter& filter, const OrderedJson& report,
                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + dir.string() + ": " + ec.message());
  }
  std::ostringstream cleaned;
  std::ostringstream discarded;
  for (const auto& o : filter.outcomes) {
    write_judgments(cleaned, o.cleaned);
    write_judgments(discarded, o.discarded);
  }
  write_file(dir / "cleaned.jsonl", cleaned.str());
  write_file(dir / "discarded.jsonl", discarded.str());
  write_file(dir / "report.json", dump_json(report));
}

std::string dump_json(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

}  // namespace prefgraph
