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

#ifndef PREFGRAPH_SRC_CLI_COMMANDS_H_
#define PREFGRAPH_SRC_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace prefgraph::cli {

// Parsed flags for every subcommand; each command reads only its own.
struct Options {
  std::string config;
  std::size_t threads = 0;
  std::string format = "table";
  std::string input;
  std::string out;
  std::string template_name = "cot";

  bool allow_impure = false;

  std::vector<std::string> metrics;
  std::string winrates;
  std::string annotations;
  std::string rankings;
  std::string text_pairs;
  std::string hc_mode = "unanimous";
  int bleu_max_order = 4;
  bool bleu_no_smoothing = false;
  bool bleu_keep_case = false;

  std::size_t models = 5;
  std::size_t questions = 10;
  double cycle_rate = 0.0;
  double tie_rate = 0.0;
  bool tie_verdicts = false;
  std::uint64_t seed = 0;

  std::string instruction;
  std::string output_1;
  std::string output_2;
};

struct Invocation {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;
  std::string command;
};

int cmd_analyze(const Invocation& inv);
int cmd_filter(const Invocation& inv);
int cmd_metrics(const Invocation& inv);
int cmd_synth(const Invocation& inv);
int cmd_render_prompt(const Invocation& inv);
int cmd_parse_replies(const Invocation& inv);

}  // namespace prefgraph::cli

#endif  // PREFGRAPH_SRC_CLI_COMMANDS_H_
