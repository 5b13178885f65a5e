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

#ifndef DPST_ERROR_H_
#define DPST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpst {

// Error categories surfaced by the library. Each maps to one failure
// named in the module contracts.
enum class ErrorCode {
  kInvalidArgument,
  kMalformedTriple,
  kMissingExtraction,
  kProviderUnavailable,
  kDimensionMismatch,
  kEmptyCorpus,
  kInvalidK,
  kUnknownCluster,
  kInvalidBudget,
  kFallbackRequired,
  kEmptyNeighborhood,
  kInvalidUtility,
  kInvalidDistribution,
  kEmptyTripleList,
  kCompletionFailed,
  kEmptyInput,
  kDivisionGuard,
  kIoError,
  kFormatError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpst

#endif  // DPST_ERROR_H_
