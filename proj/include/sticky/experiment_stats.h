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

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sticky {

struct GroupSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // n - 1 denominator
  double se_mean = 0.0;

  // Builds a summary from reported moments (e.g. a reported table).
  // Throws Error(kTooFewObservations) for n < 2.
  static GroupSummary FromMoments(std::size_t n, double mean, double sd);
};

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p_two_tailed = 1.0;
  double mean_diff = 0.0;  // mean1 - mean2
  double se_diff = 0.0;
  double ci95_lower = 0.0;
  double ci95_upper = 0.0;
};

struct LeveneResult {
  double f = 0.0;
  double df1 = 1.0;
  double df2 = 0.0;
  double p = 1.0;
};

// Throws Error(kTooFewObservations) when fewer than two values are given.
GroupSummary Summarize(std::span<const double> values);

// Student's two-sample t-test with pooled variance.
// With zero pooled variance: equal means give t = 0 and p = 1, different
// means give t = +/-infinity and p = 0.
TTestResult PooledTTest(const GroupSummary& g1, const GroupSummary& g2);

// Welch's unequal-variance t-test with Welch-Satterthwaite df. Zero variance
// in both groups falls back to the pooled df.
TTestResult WelchTTest(const GroupSummary& g1, const GroupSummary& g2);

// Mean-centred Levene test: one-way ANOVA on |x - group mean|.
LeveneResult LeveneTest(std::span<const double> group1,
                        std::span<const double> group2);

enum class Variant { kOriginal, kTreatment };

std::string_view VariantName(Variant variant);

// One participant's answer: whether the title was selected and the
// 1..5 ratings for the engagement questionnaire items.
struct UesResponse {
  std::string response_id;
  Variant variant = Variant::kOriginal;
  bool selected = false;
  std::vector<int> items;
};

// The questionnaire dimensions, one item each in the default layout.
inline constexpr std::string_view kUesDimensions[] = {
    "novelty and aesthetic appeal", "focused attention", "felt involvement",
    "perceived usability", "endurability and reward"};

// Mean of the coded items; items numbered in `reverse_items` (1-based) are
// coded as 6 - x. Throws Error(kOutOfScale) for a rating outside 1..5 and
// Error(kMalformedInput) for a response with no items.
double UesScore(const UesResponse& response,
                const std::set<std::size_t>& reverse_items = {});

struct ExperimentReport {
  GroupSummary selection_original;
  GroupSummary selection_treatment;
  LeveneResult selection_levene;
  TTestResult selection_pooled;

  GroupSummary ues_original;
  GroupSummary ues_treatment;
  LeveneResult ues_levene;
  TTestResult ues_pooled;
  TTestResult ues_welch;
};

// Group 1 is always the original variant, so mean differences read
// original - treatment. Throws Error(kMissingVariant) if either variant is
// absent and Error(kTooFewObservations) if either has fewer than two
// responses.
ExperimentReport AnalyzeExperiment(std::span<const UesResponse> responses,
                                   const std::set<std::size_t>& reverse_items = {});

// Response log: header row then response_id, variant, selected, item_1..k.
// Comma or tab delimited (detected from the header). Throws
// Error(kMalformedInput) naming the 1-based line of the first bad row.
std::vector<UesResponse> ParseResponseLog(std::string_view text);

}  // namespace sticky
