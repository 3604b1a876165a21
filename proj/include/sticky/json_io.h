// Copyright 2026 The Stickyword Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON shapes shared by the CLI, the review service and its persisted
// session file. Doubles are written with full round-trip precision.

#include "json.hpp"
#include "sticky/experiment_stats.h"
#include "sticky/stickiness_scorer.h"
#include "sticky/substitution_engine.h"
#include "sticky/text_core.h"

namespace sticky {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Polarity& p);
void from_json(const Json& j, Polarity& p);
void to_json(Json& j, const StickyScore& s);
void from_json(const Json& j, StickyScore& s);
void to_json(Json& j, const SubstitutionCandidate& c);
void from_json(const Json& j, SubstitutionCandidate& c);

Json TitleAnalysisToJson(const Title& title, const TitleAnalysis& analysis);

void to_json(Json& j, const GroupSummary& g);
void to_json(Json& j, const TTestResult& t);
void to_json(Json& j, const LeveneResult& l);

// Report document with one section per table: selection and evaluation
// group statistics, then the variance and mean-equality tests.
Json ExperimentReportToJson(const ExperimentReport& report);

}  // namespace sticky
