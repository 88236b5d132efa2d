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

#include "opforge/errors.hpp"

namespace opforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::EmptySourceSet: return "EmptySourceSet";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GenerationRetriesExhausted: return "GenerationRetriesExhausted";
    case ErrorCode::NonIntegralPartition: return "NonIntegralPartition";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::EmptySeedSet: return "EmptySeedSet";
    case ErrorCode::RoundOutOfRange: return "RoundOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HintSizeMismatch: return "HintSizeMismatch";
    case ErrorCode::StrategyInapplicable: return "StrategyInapplicable";
    case ErrorCode::GraphLoadError: return "GraphLoadError";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::EmptySet: return "EmptySet";
  }
  return "Unknown";
}

}  // namespace opforge
