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

#include "prefgraph/cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"
#include "prefgraph/error.h"
#include "prefgraph/io.h"

namespace prefgraph::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIoError, "sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

// Turns a JSON config into command-line tokens for `sub`. Top-level scalars
// apply to any subcommand defining the option; an object keyed by the
// subcommand name applies to that subcommand only.
std::vector<std::string> config_tokens(const std::filesystem::path& path,
                                       const CLI::App& sub,
                                       std::ostream& err) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "config " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError,
                "config " + path.string() + " must be a JSON object");
  }
  std::vector<std::pair<std::string, nlohmann::json>> entries;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) continue;
    entries.emplace_back(key, value);
  }
  if (auto it = doc.find(sub.get_name()); it != doc.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) entries.emplace_back(key, value);
  }

  std::vector<std::string> tokens;
  for (const auto& [key, value] : entries) {
    const std::string flag = "--" + key;
    if (key == "config") continue;
    if (sub.get_option_no_throw(flag) == nullptr) {
      if (!doc.contains(sub.get_name()) || !doc[sub.get_name()].contains(key)) {
        continue;  // belongs to another subcommand
      }
      err << "warning: config key '" << key << "' is not an option of "
          << sub.get_name() << "\n";
      continue;
    }
    if (value.is_boolean()) {
      tokens.push_back(flag + "=" + (value.get<bool>() ? "true" : "false"));
    } else if (value.is_string()) {
      tokens.push_back(flag);
      tokens.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      tokens.push_back(flag);
      tokens.push_back(value.dump());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ",";
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      tokens.push_back(flag);
      tokens.push_back(joined);
    }
  }
  return tokens;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Preference tournament analysis and purification"};
  app.name(std::string(kToolName));
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "JSON config; flags override it");
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    sub->add_option("--format", opt.format, "Standard output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Non-transitivity and entropy report");
  add_common(analyze);
  analyze->add_option("--input", opt.input, "Corpus directory or judgments.jsonl")
      ->required();
  analyze->add_option("--out", opt.out, "Directory for report.json");

  auto* filter = app.add_subcommand("filter", "Split judgments into cleaned/discarded");
  add_common(filter);
  filter->add_option("--input", opt.input, "Corpus directory or judgments.jsonl")
      ->required();
  filter->add_option("--out", opt.out, "Output directory")->required();
  filter->add_flag("--allow-impure", opt.allow_impure,
                   "Exit 0 even if the cleaned split fails the purity check");

  auto* metrics = app.add_subcommand("metrics", "Win rate, agreement, Spearman, Self-BLEU");
  add_common(metrics);
  metrics->add_option("--metrics", opt.metrics,
                      "Comma-separated subset of winrate,agreement,spearman,self-bleu")
      ->delimiter(',')
      ->check(CLI::IsMember({"winrate", "agreement", "spearman", "self-bleu"}));
  metrics->add_option("--winrates", opt.winrates, "JSONL of {model_id,wins,losses,ties}");
  metrics->add_option("--annotations", opt.annotations,
                      "JSONL of {item_id,annotators,model}");
  metrics->add_option("--rankings", opt.rankings, "JSON {\"a\":[...],\"b\":[...]}");
  metrics->add_option("--text-pairs", opt.text_pairs, "JSONL of {id,a,b,group?}");
  metrics->add_option("--hc-mode", opt.hc_mode, "Human consistency rule")
      ->check(CLI::IsMember({"unanimous", "majority"}));
  metrics->add_option("--bleu-max-order", opt.bleu_max_order, "Highest n-gram order")
      ->check(CLI::Range(1, 8));
  metrics->add_flag("--bleu-no-smoothing", opt.bleu_no_smoothing,
                    "Disable add-one smoothing for orders >= 2");
  metrics->add_flag("--bleu-keep-case", opt.bleu_keep_case, "Do not lowercase tokens");
  metrics->add_option("--out", opt.out, "Directory for metrics.json");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  add_common(synth);
  synth->add_option("--models", opt.models, "Models per question");
  synth->add_option("--questions", opt.questions, "Number of questions");
  synth->add_option("--cycle-rate", opt.cycle_rate,
                    "Probability a pair is reversed against the hidden order");
  synth->add_option("--tie-rate", opt.tie_rate, "Probability a pair is bidirectional");
  synth->add_flag("--tie-verdicts", opt.tie_verdicts,
                  "Bidirectional pairs become explicit ties instead of position bias");
  synth->add_option("--seed", opt.seed, "Random seed");
  synth->add_option("--out", opt.out, "Output directory")->required();

  auto* render = app.add_subcommand("render-prompt", "Render a judge prompt");
  add_common(render);
  render->add_option("--template", opt.template_name, "cot or cot-tie")
      ->check(CLI::IsMember({"cot", "cot-tie"}));
  render->add_option("--instruction", opt.instruction, "Instruction text (@file reads a file)")
      ->required();
  render->add_option("--output-1", opt.output_1, "Output shown as m (@file reads a file)")
      ->required();
  render->add_option("--output-2", opt.output_2, "Output shown as M (@file reads a file)")
      ->required();
  render->add_option("--out", opt.out, "Write the prompt JSON to this file");

  auto* replies = app.add_subcommand("parse-replies", "Turn judge replies into judgments");
  add_common(replies);
  replies->add_option("--input", opt.input,
                      "JSONL of {question_id,first,second,reply,source?}")
      ->required();
  replies->add_option("--template", opt.template_name, "cot or cot-tie")
      ->check(CLI::IsMember({"cot", "cot-tie"}));
  replies->add_option("--out", opt.out, "Output directory")->required();

  std::vector<std::string> argv_tokens = args;
  try {
    // Splice config values in right after the subcommand name so explicit
    // flags, which come later, take precedence.
    if (!argv_tokens.empty()) {
      CLI::App* sub = nullptr;
      for (auto* candidate : app.get_subcommands({})) {
        if (candidate->get_name() == argv_tokens.front()) sub = candidate;
      }
      std::string config_path;
      for (std::size_t i = 1; i < argv_tokens.size(); ++i) {
        if (argv_tokens[i] == "--config" && i + 1 < argv_tokens.size()) {
          config_path = argv_tokens[i + 1];
        } else if (argv_tokens[i].rfind("--config=", 0) == 0) {
          config_path = argv_tokens[i].substr(9);
        }
      }
      if (sub != nullptr && !config_path.empty()) {
        auto tokens = config_tokens(config_path, *sub, err);
        argv_tokens.insert(argv_tokens.begin() + 1, tokens.begin(), tokens.end());
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<const char*> argv;
  argv.push_back(kToolName.data());
  for (const auto& a : argv_tokens) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Invocation inv{opt, out, err, argv_tokens.front()};
  try {
    if (analyze->parsed()) return cmd_analyze(inv);
    if (filter->parsed()) return cmd_filter(inv);
    if (metrics->parsed()) return cmd_metrics(inv);
    if (synth->parsed()) return cmd_synth(inv);
    if (render->parsed()) return cmd_render_prompt(inv);
    if (replies->parsed()) return cmd_parse_replies(inv);
  } catch (const PurityViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitPurity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prefgraph::cli
