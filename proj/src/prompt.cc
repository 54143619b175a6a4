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

#include "prefgraph/prompt.h"

#include <array>
#include <cctype>
#include <utility>

#include "prefgraph/error.h"
#include "prompt_assets.h"

namespace prefgraph {

std::string_view template_name(TemplateId id) {
  return id == TemplateId::kCot ? "cot" : "cot-tie";
}

TemplateId parse_template_name(std::string_view name) {
  if (name == "cot") return TemplateId::kCot;
  if (name == "cot-tie") return TemplateId::kCotTieAllowed;
  throw Error(ErrorCode::kBadSpec,
              "unknown template '" + std::string(name) +
                  "' (expected cot or cot-tie)");
}

std::string_view system_template() { return assets::kSystemPrompt; }

std::string_view user_template(TemplateId id) {
  return id == TemplateId::kCot ? assets::kCotUserPrompt
                                : assets::kCotTieUserPrompt;
}

PromptBundle render_prompt(TemplateId id, std::string_view instruction,
                           std::string_view output_1,
                           std::string_view output_2) {
  const std::array<std::pair<std::string_view, std::string_view>, 3> slots{{
      {"{instruction}", instruction},
      {"{output_1}", output_1},
      {"{output_2}", output_2},
  }};
  for (const auto& [slot, value] : slots) {
    if (value.empty()) {
      throw Error(ErrorCode::kEmptyField, std::string(slot) + " is empty");
    }
  }

  const std::string_view tmpl = user_template(id);
  std::string user;
  user.reserve(tmpl.size() + instruction.size() + output_1.size() +
               output_2.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    bool replaced = false;
    if (tmpl[pos] == '{') {
      for (const auto& [slot, value] : slots) {
        if (tmpl.substr(pos, slot.size()) == slot) {
          user.append(value);
          pos += slot.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) user.push_back(tmpl[pos++]);
  }
  return PromptBundle{id, std::string(system_template()), std::move(user)};
}

Verdict parse_judge_reply(std::string_view reply, TemplateId id) {
  std::size_t end = reply.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(reply[end - 1]))) {
    --end;
  }
  if (end == 0) {
    throw Error(ErrorCode::kUnparseableReply, "reply is empty");
  }
  switch (reply[end - 1]) {
    case 'm':
      return Verdict::kFirstWins;
    case 'M':
      return Verdict::kSecondWins;
    case 'D':
      if (id == TemplateId::kCotTieAllowed) return Verdict::kTie;
      throw Error(ErrorCode::kUnexpectedTie,
                  "reply ends with D under the no-tie template");
    default:
      throw Error(ErrorCode::kUnparseableReply,
                  std::string("reply ends with '") + reply[end - 1] + "'");
  }
}

}  // namespace prefgraph
