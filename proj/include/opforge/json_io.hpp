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

#include <json.hpp>

#include "opforge/experiments.hpp"
#include "opforge/reduction.hpp"
#include "opforge/spectral.hpp"

namespace opforge {

// ordered_json keeps insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json to_json(const CounterexampleSpec& spec);
CounterexampleSpec counterexample_spec_from_json(const Json& j);

Json to_json(const AttackerSpec& spec);
AttackerSpec attacker_spec_from_json(const Json& j);

Json to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const Json& j);

Json to_json(const TrialStats& stats);
Json to_json(const ThresholdReport& report);
Json to_json(const SpectralReport& report);
Json to_json(const ResilienceCertificate& cert);
Json to_json(const StabilizationReport& report);
Json to_json(const MIResult& result);
Json to_json(const SeedColoring& seed);

const char* tie_rule_name(TieRule rule);
TieRule tie_rule_from_string(const std::string& name);
const char* win_mode_name(WinMode mode);
WinMode win_mode_from_string(const std::string& name);

}  // namespace opforge
