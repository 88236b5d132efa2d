// Copyright 2026 The opinion-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace opforge {

// Domain error codes. The CLI maps these to structured JSON on stderr and
// exit code 1; usage errors exit 2.
enum class ErrorCode {
  SelfLoop,
  NodeOutOfRange,
  EmptySourceSet,
  InvalidSpec,
  GenerationRetriesExhausted,
  NonIntegralPartition,
  IsolatedNode,
  NoConvergence,
  NotRegular,
  InvalidParameters,
  EmptySeedSet,
  RoundOutOfRange,
  Disconnected,
  HintSizeMismatch,
  StrategyInapplicable,
  GraphLoadError,
  NotAClique,
  InstanceTooLarge,
  EmptySet,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace opforge
