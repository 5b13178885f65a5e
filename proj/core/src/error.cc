// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpst/error.h"

#include <string>

namespace dpst {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMalformedTriple:
      return "MalformedTriple";
    case ErrorCode::kMissingExtraction:
      return "MissingExtraction";
    case ErrorCode::kProviderUnavailable:
      return "ProviderUnavailable";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kInvalidK:
      return "InvalidK";
    case ErrorCode::kUnknownCluster:
      return "UnknownCluster";
    case ErrorCode::kInvalidBudget:
      return "InvalidBudget";
    case ErrorCode::kFallbackRequired:
      return "FallbackRequired";
    case ErrorCode::kEmptyNeighborhood:
      return "EmptyNeighborhood";
    case ErrorCode::kInvalidUtility:
      return "InvalidUtility";
    case ErrorCode::kInvalidDistribution:
      return "InvalidDistribution";
    case ErrorCode::kEmptyTripleList:
      return "EmptyTripleList";
    case ErrorCode::kCompletionFailed:
      return "CompletionFailed";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kDivisionGuard:
      return "DivisionGuard";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kFormatError:
      return "FormatError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace dpst
