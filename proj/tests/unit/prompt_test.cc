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


#include <gtest/gtest.h>

#include "prefgraph/error.h"
#include "prefgraph/io.h"
#include "prefgraph/prompt.h"
#include "test_util.h"

namespace prefgraph {
namespace {

using testing::data_path;

constexpr const char* kInstruction = "Name a primary color. Use {braces} freely.";
constexpr const char* kOutput1 = "Red.";
constexpr const char* kOutput2 = "Blue, not {output_1}.";

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(Templates, Names) {
  EXPECT_EQ(template_name(TemplateId::kCot), "cot");
  EXPECT_EQ(template_name(TemplateId::kCotTieAllowed), "cot-tie");
  EXPECT_EQ(parse_template_name("cot-tie"), TemplateId::kCotTieAllowed);
  EXPECT_EQ(code_of([] { parse_template_name("zero-shot"); }), ErrorCode::kBadSpec);
}

TEST(Templates, SystemPromptMatchesGolden) {
  EXPECT_EQ(system_template(), read_file(data_path("prompts/system.txt")));
}

TEST(RenderPrompt, CotMatchesGolden) {
  const auto p = render_prompt(TemplateId::kCot, kInstruction, kOutput1, kOutput2);
  EXPECT_EQ(p.user, read_file(data_path("prompts/cot_rendered.txt")));
  EXPECT_EQ(p.system, read_file(data_path("prompts/system.txt")));
  EXPECT_TRUE(p.user.ends_with("\"Which is best, m or M?\""));
}

TEST(RenderPrompt, TieVariantMatchesGolden) {
  const auto p = render_prompt(TemplateId::kCotTieAllowed, kInstruction, kOutput1, kOutput2);
  EXPECT_EQ(p.user, read_file(data_path("prompts/cot_tie_rendered.txt")));
  EXPECT_TRUE(p.user.ends_with("\"Which is best, m, M or D?\""));
}

TEST(RenderPrompt, SubstitutionIsSinglePass) {
  const auto p = render_prompt(TemplateId::kCot, "{output_2}", "{instruction}", "x");
  EXPECT_NE(p.user.find(R"("instruction": """{output_2}""")"), std::string::npos);
  EXPECT_NE(p.user.find(R"("output": """{instruction}""")"), std::string::npos);
}

TEST(RenderPrompt, SlotsAppearOnceEach) {
  for (TemplateId id : {TemplateId::kCot, TemplateId::kCotTieAllowed}) {
    const std::string_view t = user_template(id);
    for (const char* slot : {"{instruction}", "{output_1}", "{output_2}"}) {
      const auto first = t.find(slot);
      ASSERT_NE(first, std::string_view::npos) << slot;
      EXPECT_EQ(t.find(slot, first + 1), std::string_view::npos) << slot;
    }
  }
}

TEST(RenderPrompt, EmptyFieldRejected) {
  EXPECT_EQ(code_of([] { render_prompt(TemplateId::kCot, "", "a", "b"); }),
            ErrorCode::kEmptyField);
  EXPECT_EQ(code_of([] { render_prompt(TemplateId::kCot, "i", "a", ""); }),
            ErrorCode::kEmptyField);
}

TEST(ParseReply, FinalToken) {
  EXPECT_EQ(parse_judge_reply("### Concise explanation\nGood.\n### Which is best, m or M?\nM",
                              TemplateId::kCot),
            Verdict::kSecondWins);
  EXPECT_EQ(parse_judge_reply("explanation... m", TemplateId::kCot), Verdict::kFirstWins);
  EXPECT_EQ(parse_judge_reply("both fine\nD\n", TemplateId::kCotTieAllowed), Verdict::kTie);
  EXPECT_EQ(parse_judge_reply("m  \n\t", TemplateId::kCotTieAllowed), Verdict::kFirstWins);
}

TEST(ParseReply, Quarantine) {
  EXPECT_EQ(code_of([] { parse_judge_reply("answer X", TemplateId::kCot); }),
            ErrorCode::kUnparseableReply);
  EXPECT_EQ(code_of([] { parse_judge_reply("", TemplateId::kCot); }),
            ErrorCode::kUnparseableReply);
  EXPECT_EQ(code_of([] { parse_judge_reply("M.", TemplateId::kCot); }),
            ErrorCode::kUnparseableReply);
  EXPECT_EQ(code_of([] { parse_judge_reply("tie: D", TemplateId::kCot); }),
            ErrorCode::kUnexpectedTie);
}

}  // namespace
}  // namespace prefgraph
