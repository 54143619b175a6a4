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

// Pairwise judge prompts and the reply protocol.
//
// The first output is labelled `m` and the second `M`; the tie-allowed
// variant adds `D`. The judge's verdict is the last non-whitespace
// character of its reply.

#ifndef PREFGRAPH_PROMPT_H_
#define PREFGRAPH_PROMPT_H_

#include <string>
#include <string_view>

#include "prefgraph/graph.h"

namespace prefgraph {

enum class TemplateId { kCot, kCotTieAllowed };

// "cot" / "cot-tie".
std::string_view template_name(TemplateId id);
// Throws Error(kBadSpec) for unknown names.
TemplateId parse_template_name(std::string_view name);

struct PromptBundle {
  TemplateId template_id = TemplateId::kCot;
  std::string system;
  std::string user;
};

std::string_view system_template();
std::string_view user_template(TemplateId id);

// Replaces {instruction}, {output_1} and {output_2} in one pass; substituted
// text is never rescanned. Throws Error(kEmptyField) for an empty argument.
PromptBundle render_prompt(TemplateId id, std::string_view instruction,
                           std::string_view output_1,
                           std::string_view output_2);

// Throws Error(kUnparseableReply) for any other final character and
// Error(kUnexpectedTie) for `D` under the no-tie template.
Verdict parse_judge_reply(std::string_view reply, TemplateId id);

}  // namespace prefgraph

#endif  // PREFGRAPH_PROMPT_H_
