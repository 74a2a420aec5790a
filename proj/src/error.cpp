// Copyright 2026 The gridpair Authors
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

#include "gridpair/error.hpp"

namespace gridpair {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kInfeasibleBudget: return "INFEASIBLE_BUDGET";
    case ErrorCode::kOddDegree: return "ODD_DEGREE";
    case ErrorCode::kNotRegular: return "NOT_REGULAR";
    case ErrorCode::kNotBipartite: return "NOT_BIPARTITE";
    case ErrorCode::kWrongFactorCount: return "WRONG_FACTOR_COUNT";
    case ErrorCode::kClaimViolation: return "CLAIM_VIOLATION";
    case ErrorCode::kBaseSolverExhausted: return "BASE_SOLVER_EXHAUSTED";
    case ErrorCode::kEndpointMismatch: return "ENDPOINT_MISMATCH";
    case ErrorCode::kSizeLimit: return "SIZE_LIMIT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace gridpair
