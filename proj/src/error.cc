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

#include "prefgraph/error.h"

#include <utility>

namespace prefgraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidJudgment: return "InvalidJudgment";
    case ErrorCode::kDuplicateJudgment: return "DuplicateJudgment";
    case ErrorCode::kQuestionMismatch: return "QuestionMismatch";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kIncompleteGraph: return "IncompleteGraph";
    case ErrorCode::kUncoveredPair: return "UncoveredPair";
    case ErrorCode::kPurityViolation: return "PurityViolation";
    case ErrorCode::kNoComparisons: return "NoComparisons";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kNoMajorityItems: return "NoMajorityItems";
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kDegenerateRanking: return "DegenerateRanking";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kBadVerdict: return "BadVerdict";
    case ErrorCode::kEmptyField: return "EmptyField";
    case ErrorCode::kUnparseableReply: return "UnparseableReply";
    case ErrorCode::kUnexpectedTie: return "UnexpectedTie";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kOracleLimit: return "OracleLimit";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line,
                       const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::string purity_message(const std::vector<std::string>& ids, double rho,
                           double tau_avg) {
  std::string msg = "cleaned corpus is not transitive (rho=" +
                    std::to_string(rho) + ", tau_avg=" +
                    std::to_string(tau_avg) + "); questions:";
  for (const auto& id : ids) msg += " " + id;
  return msg;
}

}  // namespace

PurityViolation::PurityViolation(std::vector<std::string> question_ids,
                                 double rho, double tau_avg)
    : Error(ErrorCode::kPurityViolation,
            purity_message(question_ids, rho, tau_avg)),
      question_ids_(std::move(question_ids)),
      rho_(rho),
      tau_avg_(tau_avg) {}

}  // namespace prefgraph
