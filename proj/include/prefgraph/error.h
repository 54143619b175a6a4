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

#ifndef PREFGRAPH_ERROR_H_
#define PREFGRAPH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prefgraph {

enum class ErrorCode {
  kInvalidJudgment,
  kDuplicateJudgment,
  kQuestionMismatch,
  kUnknownVertex,
  kEmptyCorpus,
  kIncompleteGraph,
  kUncoveredPair,
  kPurityViolation,
  kNoComparisons,
  kInsufficientData,
  kNoMajorityItems,
  kRankMismatch,
  kDegenerateRanking,
  kEmptyText,
  kParseError,
  kBadVerdict,
  kEmptyField,
  kUnparseableReply,
  kUnexpectedTie,
  kIoError,
  kBadSpec,
  kOracleLimit,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // what() without the leading "<code name>: ".
  std::string_view detail() const noexcept {
    return std::string_view(what()).substr(error_code_name(code_).size() + 2);
  }

 private:
  ErrorCode code_;
};

// Malformed input line; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class PurityViolation : public Error {
 public:
  PurityViolation(std::vector<std::string> question_ids, double rho,
                  double tau_avg);

  const std::vector<std::string>& question_ids() const noexcept {
    return question_ids_;
  }
  double rho() const noexcept { return rho_; }
  double tau_avg() const noexcept { return tau_avg_; }

 private:
  std::vector<std::string> question_ids_;
  double rho_;
  double tau_avg_;
};

}  // namespace prefgraph

#endif  // PREFGRAPH_ERROR_H_
