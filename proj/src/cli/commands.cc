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

#include "commands.h"

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "prefgraph/analysis.h"
#include "prefgraph/cli.h"
#include "prefgraph/error.h"
#include "prefgraph/io.h"
#include "prefgraph/metrics.h"
#include "prefgraph/prompt.h"
#include "prefgraph/purify.h"
#include "prefgraph/synth.h"

namespace fs = std::filesystem;

namespace prefgraph::cli {
namespace {

struct InputFile {
  fs::path path;
  std::string content;
};

// Prefixes a parse error with its file.
Error located(const fs::path& path, const ParseError& e) {
  return Error(e.code(), path.string() + ": " + std::string(e.detail()));
}

InputFile load_input(const fs::path& path) {
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::kIoError, "input not found: " + path.string());
  }
  return {path, read_file(path)};
}

// A corpus is either a directory holding judgments.jsonl (plus optional
// questions.jsonl and responses.jsonl) or a bare judgments file.
struct Corpus {
  std::vector<InputFile> files;
  std::vector<Judgment> judgments;
};

Corpus load_corpus(const std::string& input) {
  Corpus corpus;
  const fs::path path(input);
  if (fs::is_directory(path)) {
    corpus.files.push_back(load_input(path / "judgments.jsonl"));
    for (const char* name : {"questions.jsonl", "responses.jsonl"}) {
      if (fs::exists(path / name)) corpus.files.push_back(load_input(path / name));
    }
  } else {
    corpus.files.push_back(load_input(path));
  }
  std::istringstream in(corpus.files.front().content);
  try {
    corpus.judgments = parse_judgments(in);
  } catch (const ParseError& e) {
    throw located(corpus.files.front().path, e);
  }
  if (fs::is_directory(path)) {
    validate_against_manifest(load_manifest(path), corpus.judgments);
  }
  return corpus;
}

OrderedJson header(const Invocation& inv, OrderedJson config,
                   const std::vector<InputFile>& inputs) {
  OrderedJson doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = inv.command;
  doc["config"] = std::move(config);
  OrderedJson list = OrderedJson::array();
  for (const auto& f : inputs) {
    OrderedJson entry;
    entry["path"] = f.path.generic_string();
    entry["sha256"] = sha256_hex(f.content);
    list.push_back(std::move(entry));
  }
  doc["inputs"] = std::move(list);
  return doc;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + dir.string() + ": " + ec.message());
  }
}

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

bool want_json(const Invocation& inv) { return inv.opt.format == "json"; }

}  // namespace

int cmd_analyze(const Invocation& inv) {
  const Corpus corpus = load_corpus(inv.opt.input);
  const CorpusAnalysis analysis = analyze_corpus(corpus.judgments, inv.opt.threads);
  OrderedJson config;
  config["input"] = inv.opt.input;
  const OrderedJson report =
      analysis_to_json(header(inv, config, corpus.files), analysis);

  for (const auto& qid : analysis.incomplete) {
    inv.err << "warning: question " << qid
            << " has an incomplete graph; excluded from rho and tau_avg\n";
  }
  if (!analysis.incomplete.empty()) {
    inv.err << "warnings: " << analysis.incomplete.size() << "\n";
  }
  if (!inv.opt.out.empty()) {
    ensure_dir(inv.opt.out);
    write_file(fs::path(inv.opt.out) / "report.json", dump_json(report));
  }
  inv.out << (want_json(inv) ? dump_json(report) : analysis_table(analysis));
  return kExitOk;
}

int cmd_filter(const Invocation& inv) {
  const Corpus corpus = load_corpus(inv.opt.input);
  const std::size_t threads = inv.opt.threads;
  const CorpusFilter filter = purify_corpus(corpus.judgments, threads);
  for (const auto& qid : filter.skipped) {
    inv.err << "warning: question " << qid
            << " has an incomplete graph; skipped\n";
  }

  // Input metrics over the processed (complete) questions.
  double input_rho = 0.0;
  CorpusClarity input_clarity;
  if (!filter.outcomes.empty()) {
    const CorpusAnalysis analysis = analyze_corpus(corpus.judgments, threads);
    input_rho = analysis.rho;
    input_clarity = analysis.clarity;
  }

  std::vector<Judgment> cleaned;
  for (const auto& o : filter.outcomes) {
    cleaned.insert(cleaned.end(), o.cleaned.begin(), o.cleaned.end());
  }
  OrderedJson purity;
  std::optional<PurityViolation> violation;
  if (cleaned.empty()) {
    purity["rho"] = 0.0;
    purity["tau_avg"] = 0.0;
    purity["questions"] = 0;
    purity["pure"] = true;
    purity["violations"] = OrderedJson::array();
  } else {
    try {
      const PurityReport r = verify_purity(cleaned, threads);
      purity["rho"] = r.rho;
      purity["tau_avg"] = r.tau_avg;
      purity["questions"] = r.questions;
      purity["pure"] = true;
      purity["violations"] = OrderedJson::array();
    } catch (const PurityViolation& e) {
      purity["rho"] = e.rho();
      purity["tau_avg"] = e.tau_avg();
      purity["questions"] = filter.outcomes.size();
      purity["pure"] = false;
      purity["violations"] = e.question_ids();
      violation = e;
    }
  }

  OrderedJson config;
  config["input"] = inv.opt.input;
  config["allow_impure"] = inv.opt.allow_impure;
  const OrderedJson report = split_report(header(inv, config, corpus.files),
                                          filter, input_rho, input_clarity, purity);
  write_split(filter, report, inv.opt.out);

  if (want_json(inv)) {
    inv.out << dump_json(report);
  } else {
    const auto& counts = report["judgments"];
    inv.out << "questions " << filter.outcomes.size() << "  skipped "
            << filter.skipped.size() << "\n"
            << "judgments " << counts["input"].get<std::size_t>() << "  cleaned "
            << counts["cleaned"].get<std::size_t>() << "  discarded "
            << counts["discarded"].get<std::size_t>() << "  retention "
            << fixed(report["retention"].get<double>()) << "\n"
            << "input   rho " << fixed(input_rho) << "  tau_avg "
            << fixed(input_clarity.tau_avg) << "\n"
            << "cleaned rho " << fixed(purity["rho"].get<double>())
            << "  tau_avg " << fixed(purity["tau_avg"].get<double>()) << "\n";
  }
  if (violation) {
    inv.err << (inv.opt.allow_impure ? "warning: " : "error: ") << violation->what()
            << "\n"
            << "note: explicit tie verdicts kept in the cleaned split still "
               "contribute structural entropy\n";
    if (!inv.opt.allow_impure) return kExitPurity;
  }
  return kExitOk;
}

namespace {

fs::path require_input(const std::string& path, const char* flag,
                       const char* metric) {
  if (path.empty()) {
    throw Error(ErrorCode::kIoError, std::string("metric '") + metric +
                                         "' needs " + flag);
  }
  return path;
}

std::vector<WinRateRecord> parse_winrates(const InputFile& f) {
  std::vector<WinRateRecord> out;
  std::istringstream in(f.content);
  for_each_json_line(in, [&](std::size_t line, const nlohmann::json& obj) {
    try {
      WinRateRecord r;
      r.model_id = obj.at("model_id").get<std::string>();
      r.wins = obj.at("wins").get<double>();
      r.losses = obj.at("losses").get<double>();
      r.ties = obj.value("ties", 0.0);
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(ErrorCode::kParseError, line, e.what());
    }
  });
  return out;
}

std::vector<AnnotationItem> parse_annotations(const InputFile& f) {
  std::vector<AnnotationItem> out;
  std::istringstream in(f.content);
  for_each_json_line(in, [&](std::size_t line, const nlohmann::json& obj) {
    try {
      AnnotationItem item;
      item.item_id = obj.at("item_id").get<std::string>();
      for (const auto& v : obj.at("annotators")) {
        item.annotators.push_back(parse_verdict_token(v.get<std::string>()));
      }
      item.model = parse_verdict_token(obj.at("model").get<std::string>());
      out.push_back(std::move(item));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(ErrorCode::kParseError, line, e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), line, e.what());
    }
  });
  return out;
}

struct TextPair {
  std::string id;
  std::string a;
  std::string b;
  std::string group;
};

std::vector<TextPair> parse_text_pairs(const InputFile& f) {
  std::vector<TextPair> out;
  std::istringstream in(f.content);
  for_each_json_line(in, [&](std::size_t line, const nlohmann::json& obj) {
    try {
      out.push_back({obj.at("id").get<std::string>(), obj.at("a").get<std::string>(),
                     obj.at("b").get<std::string>(), obj.value("group", "")});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(ErrorCode::kParseError, line, e.what());
    }
  });
  return out;
}

template <typename Fn>
auto with_location(const InputFile& f, Fn&& fn) {
  try {
    return fn(f);
  } catch (const ParseError& e) {
    throw located(f.path, e);
  }
}

}  // namespace

int cmd_metrics(const Invocation& inv) {
  const Options& o = inv.opt;
  std::set<std::string> enabled(o.metrics.begin(), o.metrics.end());
  if (enabled.empty()) {
    if (!o.winrates.empty()) enabled.insert("winrate");
    if (!o.annotations.empty()) enabled.insert("agreement");
    if (!o.rankings.empty()) enabled.insert("spearman");
    if (!o.text_pairs.empty()) enabled.insert("self-bleu");
  }
  if (enabled.empty()) {
    throw Error(ErrorCode::kIoError,
                "no metric inputs given (--winrates, --annotations, --rankings, "
                "--text-pairs)");
  }

  // Validate every path before computing anything.
  std::map<std::string, InputFile> files;
  if (enabled.contains("winrate")) {
    files["winrate"] = load_input(require_input(o.winrates, "--winrates", "winrate"));
  }
  if (enabled.contains("agreement")) {
    files["agreement"] =
        load_input(require_input(o.annotations, "--annotations", "agreement"));
  }
  if (enabled.contains("spearman")) {
    files["spearman"] = load_input(require_input(o.rankings, "--rankings", "spearman"));
  }
  if (enabled.contains("self-bleu")) {
    files["self-bleu"] =
        load_input(require_input(o.text_pairs, "--text-pairs", "self-bleu"));
  }

  OrderedJson config;
  config["metrics"] = std::vector<std::string>(enabled.begin(), enabled.end());
  config["hc_mode"] = o.hc_mode;
  config["bleu_max_order"] = o.bleu_max_order;
  config["bleu_smoothing"] = !o.bleu_no_smoothing;
  config["bleu_lowercase"] = !o.bleu_keep_case;
  std::vector<InputFile> inputs;
  for (const char* key : {"winrate", "agreement", "spearman", "self-bleu"}) {
    if (auto it = files.find(key); it != files.end()) inputs.push_back(it->second);
  }
  OrderedJson doc = header(inv, config, inputs);
  std::ostringstream table;

  if (auto it = files.find("winrate"); it != files.end()) {
    const auto records = with_location(it->second, parse_winrates);
    OrderedJson section;
    OrderedJson models = OrderedJson::array();
    table << "win rate\n";
    for (const auto& r : records) {
      OrderedJson m;
      m["model_id"] = r.model_id;
      m["wins"] = r.wins;
      m["losses"] = r.losses;
      m["ties"] = r.ties;
      m["r_adj"] = r.adjusted();
      table << "  " << r.model_id << "  r_adj " << fixed(r.adjusted()) << "\n";
      models.push_back(std::move(m));
    }
    section["models"] = std::move(models);
    if (records.size() >= 2) {
      const double sigma = win_rate_dispersion(records);
      section["sigma"] = sigma;
      table << "  sigma " << fixed(sigma) << "\n";
    } else {
      section["sigma"] = nullptr;
    }
    doc["winrate"] = std::move(section);
  }

  if (auto it = files.find("agreement"); it != files.end()) {
    const auto items = with_location(it->second, parse_annotations);
    const ConsensusMode mode =
        o.hc_mode == "majority" ? ConsensusMode::kMajority : ConsensusMode::kUnanimous;
    const double hc = human_consistency(items, mode);
    const AgreementResult mha = model_human_agreement(items);
    OrderedJson section;
    section["items"] = items.size();
    section["hc_mode"] = o.hc_mode;
    section["hc"] = hc;
    section["mha"] = mha.rate;
    section["mha_counted"] = mha.counted;
    section["mha_matched"] = mha.matched;
    section["mha_excluded"] = mha.excluded;
    doc["agreement"] = std::move(section);
    table << "agreement\n  HC " << fixed(hc) << "  MHA " << fixed(mha.rate) << " ("
          << mha.matched << "/" << mha.counted << ", " << mha.excluded
          << " excluded)\n";
  }

  if (auto it = files.find("spearman"); it != files.end()) {
    std::vector<double> a;
    std::vector<double> b;
    try {
      const auto obj = nlohmann::json::parse(it->second.content);
      a = obj.at("a").get<std::vector<double>>();
      b = obj.at("b").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, it->second.path.string() + ": " + e.what());
    }
    const double rho = spearman(a, b);
    OrderedJson section;
    section["n"] = a.size();
    section["rho"] = rho;
    doc["spearman"] = std::move(section);
    table << "spearman\n  rho " << fixed(rho) << "  n " << a.size() << "\n";
  }

  if (auto it = files.find("self-bleu"); it != files.end()) {
    const auto pairs = with_location(it->second, parse_text_pairs);
    const BleuConfig cfg{o.bleu_max_order, !o.bleu_no_smoothing, !o.bleu_keep_case};
    OrderedJson rows = OrderedJson::array();
    std::map<std::string, std::pair<double, std::size_t>> groups;
    double sum = 0.0;
    for (const auto& p : pairs) {
      const double score = self_bleu(p.a, p.b, cfg);
      OrderedJson row;
      row["id"] = p.id;
      if (!p.group.empty()) row["group"] = p.group;
      row["score"] = score;
      rows.push_back(std::move(row));
      sum += score;
      if (!p.group.empty()) {
        groups[p.group].first += score;
        groups[p.group].second += 1;
      }
    }
    OrderedJson section;
    section["pairs"] = std::move(rows);
    section["mean"] = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
    OrderedJson by_group = OrderedJson::object();
    for (const auto& [g, acc] : groups) {
      by_group[g] = acc.first / static_cast<double>(acc.second);
    }
    section["groups"] = std::move(by_group);
    table << "self-bleu\n  mean " << fixed(section["mean"].get<double>()) << "  pairs "
          << pairs.size() << "\n";
    for (const auto& [g, acc] : groups) {
      table << "  " << g << " " << fixed(acc.first / static_cast<double>(acc.second))
            << "\n";
    }
    doc["self_bleu"] = std::move(section);
  }

  if (!o.out.empty()) {
    ensure_dir(o.out);
    write_file(fs::path(o.out) / "metrics.json", dump_json(doc));
  }
  inv.out << (want_json(inv) ? dump_json(doc) : table.str());
  return kExitOk;
}

int cmd_synth(const Invocation& inv) {
  const Options& o = inv.opt;
  SynthSpec spec;
  spec.n_models = o.models;
  spec.n_questions = o.questions;
  spec.cycle_rate = o.cycle_rate;
  spec.tie_rate = o.tie_rate;
  spec.seed = o.seed;
  spec.tie_verdicts = o.tie_verdicts;
  validate(spec);

  const SynthCorpus corpus = gen_corpus(spec);
  const CorpusAnalysis analysis = analyze_corpus(corpus.judgments, o.threads);

  const fs::path dir(o.out);
  ensure_dir(dir);
  std::ostringstream questions;
  std::ostringstream responses;
  std::ostringstream judgments;
  write_questions(questions, corpus.questions);
  write_responses(responses, corpus.responses);
  write_judgments(judgments, corpus.judgments);
  write_file(dir / "questions.jsonl", questions.str());
  write_file(dir / "responses.jsonl", responses.str());
  write_file(dir / "judgments.jsonl", judgments.str());

  OrderedJson config;
  config["models"] = spec.n_models;
  config["questions"] = spec.n_questions;
  config["cycle_rate"] = spec.cycle_rate;
  config["tie_rate"] = spec.tie_rate;
  config["tie_verdicts"] = spec.tie_verdicts;
  config["seed"] = spec.seed;
  OrderedJson summary = header(inv, config, {});
  summary["judgments"] = corpus.judgments.size();
  summary["rho"] = analysis.rho;
  summary["tau_avg"] = analysis.clarity.tau_avg;
  write_file(dir / "synth.json", dump_json(summary));

  if (want_json(inv)) {
    inv.out << dump_json(summary);
  } else {
    inv.out << "questions " << spec.n_questions << "  models " << spec.n_models
            << "  judgments " << corpus.judgments.size() << "\n"
            << "rho " << fixed(analysis.rho) << "  tau_avg "
            << fixed(analysis.clarity.tau_avg) << "\n";
  }
  return kExitOk;
}

namespace {

// "@path" reads the value from a file.
std::string text_arg(const std::string& value) {
  if (value.size() > 1 && value.front() == '@') return read_file(value.substr(1));
  return value;
}

}  // namespace

int cmd_render_prompt(const Invocation& inv) {
  const TemplateId id = parse_template_name(inv.opt.template_name);
  const PromptBundle prompt =
      render_prompt(id, text_arg(inv.opt.instruction), text_arg(inv.opt.output_1),
                    text_arg(inv.opt.output_2));
  OrderedJson doc;
  doc["template"] = template_name(id);
  doc["system"] = prompt.system;
  doc["user"] = prompt.user;
  if (!inv.opt.out.empty()) write_file(inv.opt.out, dump_json(doc));
  if (want_json(inv)) {
    inv.out << dump_json(doc);
  } else {
    inv.out << "[system]\n" << prompt.system << "\n\n[user]\n" << prompt.user << "\n";
  }
  return kExitOk;
}

int cmd_parse_replies(const Invocation& inv) {
  const TemplateId id = parse_template_name(inv.opt.template_name);
  const InputFile input = load_input(inv.opt.input);

  std::vector<Judgment> judgments;
  std::ostringstream quarantine;
  std::size_t quarantined = 0;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::istringstream in(input.content);

  const auto reject = [&](std::size_t line, const nlohmann::json& obj,
                          ErrorCode code, const std::string& message) {
    OrderedJson q;
    q["line"] = line;
    for (const char* key : {"question_id", "first", "second", "reply"}) {
      if (auto it = obj.find(key); it != obj.end()) q[key] = *it;
    }
    q["error"] = error_code_name(code);
    q["message"] = message;
    quarantine << q.dump() << '\n';
    ++quarantined;
  };

  try {
    for_each_json_line(in, [&](std::size_t line, const nlohmann::json& obj) {
      Judgment j;
      std::string reply;
      try {
        j.question_id = obj.at("question_id").get<std::string>();
        j.first = obj.at("first").get<std::string>();
        j.second = obj.at("second").get<std::string>();
        reply = obj.at("reply").get<std::string>();
        if (auto it = obj.find("source"); it != obj.end() && it->is_string()) {
          j.source = it->get<std::string>();
        }
      } catch (const nlohmann::json::exception& e) {
        reject(line, obj, ErrorCode::kParseError, e.what());
        return;
      }
      if (j.question_id.empty() || j.first.empty() || j.second.empty() ||
          j.first == j.second) {
        reject(line, obj, ErrorCode::kInvalidJudgment,
               "question_id, first and second must be non-empty and distinct");
        return;
      }
      try {
        j.verdict = parse_judge_reply(reply, id);
      } catch (const Error& e) {
        reject(line, obj, e.code(), e.what());
        return;
      }
      if (!seen.emplace(j.question_id, j.first, j.second).second) {
        reject(line, obj, ErrorCode::kDuplicateJudgment, "ordered pair already seen");
        return;
      }
      judgments.push_back(std::move(j));
    });
  } catch (const ParseError& e) {
    throw located(input.path, e);
  }

  const fs::path dir(inv.opt.out);
  ensure_dir(dir);
  std::ostringstream accepted;
  write_judgments(accepted, judgments);
  write_file(dir / "judgments.jsonl", accepted.str());
  write_file(dir / "quarantine.jsonl", quarantine.str());

  OrderedJson config;
  config["input"] = inv.opt.input;
  config["template"] = template_name(id);
  OrderedJson report = header(inv, config, {input});
  report["accepted"] = judgments.size();
  report["quarantined"] = quarantined;
  write_file(dir / "report.json", dump_json(report));

  if (quarantined != 0) {
    inv.err << "warning: " << quarantined << " replies quarantined\n";
  }
  if (want_json(inv)) {
    inv.out << dump_json(report);
  } else {
    inv.out << "accepted " << judgments.size() << "  quarantined " << quarantined
            << "\n";
  }
  return kExitOk;
}

}  // namespace prefgraph::cli
