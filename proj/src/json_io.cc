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

#include "sticky/json_io.h"

#include "sticky/errors.h"

namespace sticky {

namespace {

PolarityLabel ParsePolarityLabel(const std::string& name) {
  if (name == "Positive") return PolarityLabel::kPositive;
  if (name == "Negative") return PolarityLabel::kNegative;
  if (name == "Neutral") return PolarityLabel::kNeutral;
  throw Error(ErrorCode::kMalformedInput, "unknown polarity '" + name + "'");
}

}  // namespace

void to_json(Json& j, const Polarity& p) {
  j = Json{{"label", PolarityLabelName(p.label)}, {"valence", p.valence}};
}

void from_json(const Json& j, Polarity& p) {
  p.label = ParsePolarityLabel(j.at("label").get<std::string>());
  p.valence = j.at("valence").get<double>();
}

void to_json(Json& j, const StickyScore& s) {
  j = Json{{"familiarity", s.familiarity},
           {"novelty", s.novelty},
           {"polarity", s.polarity},
           {"composite", s.composite}};
}

void from_json(const Json& j, StickyScore& s) {
  s.familiarity = j.at("familiarity").get<double>();
  s.novelty = j.at("novelty").get<double>();
  s.polarity = j.at("polarity").get<Polarity>();
  s.composite = j.at("composite").get<double>();
}

void to_json(Json& j, const SubstitutionCandidate& c) {
  j = Json{{"title_id", c.title_id},
           {"position", c.position},
           {"original", c.original},
           {"replacement", c.replacement},
           {"original_score", c.original_score},
           {"replacement_score", c.replacement_score},
           {"delta", c.delta},
           {"status", ReviewStatusName(c.status)}};
}

void from_json(const Json& j, SubstitutionCandidate& c) {
  c.title_id = j.at("title_id").get<std::string>();
  c.position = j.at("position").get<std::size_t>();
  c.original = j.at("original").get<std::string>();
  c.replacement = j.at("replacement").get<std::string>();
  c.original_score = j.at("original_score").get<StickyScore>();
  c.replacement_score = j.at("replacement_score").get<StickyScore>();
  c.delta = j.at("delta").get<double>();
  c.status = ParseReviewStatus(j.value("status", std::string("Pending")));
}

Json TitleAnalysisToJson(const Title& title, const TitleAnalysis& analysis) {
  Json words = Json::array();
  for (const WordScore& w : analysis.words) {
    Json row{{"position", w.position},
             {"word", w.word},
             {"surface", title.tokens[w.position].surface}};
    row.update(Json(w.score));
    words.push_back(std::move(row));
  }
  return Json{{"id", title.id},
              {"text", title.raw},
              {"words", std::move(words)},
              {"title_score", analysis.title_score}};
}

void to_json(Json& j, const GroupSummary& g) {
  j = Json{{"n", g.n}, {"mean", g.mean}, {"sd", g.sd}, {"se_mean", g.se_mean}};
}

void to_json(Json& j, const TTestResult& t) {
  j = Json{{"t", t.t},
           {"df", t.df},
           {"sig_2_tailed", t.p_two_tailed},
           {"mean_difference", t.mean_diff},
           {"std_error_difference", t.se_diff},
           {"ci95_lower", t.ci95_lower},
           {"ci95_upper", t.ci95_upper}};
}

void to_json(Json& j, const LeveneResult& l) {
  j = Json{{"F", l.f}, {"df1", l.df1}, {"df2", l.df2}, {"sig", l.p}};
}

Json ExperimentReportToJson(const ExperimentReport& r) {
  return Json{
      {"selection",
       {{"groups",
         {{"original", r.selection_original},
          {"treatment", r.selection_treatment}}},
        {"levene", r.selection_levene},
        {"equal_variances_assumed", r.selection_pooled}}},
      {"evaluation",
       {{"groups",
         {{"original", r.ues_original}, {"treatment", r.ues_treatment}}},
        {"levene", r.ues_levene},
        {"equal_variances_assumed", r.ues_pooled},
        {"equal_variances_not_assumed", r.ues_welch}}}};
}

}  // namespace sticky
