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

#include "sticky/stickiness_scorer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sticky/errors.h"

namespace sticky {

void ScoreConfig::Validate() const {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!unit(theta_f) || !unit(theta_n)) {
    throw Error(ErrorCode::kMalformedInput, "thresholds must lie in [0, 1]");
  }
  if (!(neutral_band >= 0.0 && neutral_band < 1.0)) {
    throw Error(ErrorCode::kMalformedInput, "neutral_band must lie in [0, 1)");
  }
}

ScoreConfig ParseScoreConfig(std::string_view text, ScoreConfig base) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_object()) {
      throw Error(ErrorCode::kMalformedInput, "config must be a JSON object");
    }
    base.theta_f = doc.value("theta_f", base.theta_f);
    base.theta_n = doc.value("theta_n", base.theta_n);
    base.require_emotive = doc.value("require_emotive", base.require_emotive);
    base.neutral_band = doc.value("neutral_band", base.neutral_band);
    base.min_len = doc.value("min_len", base.min_len);
    base.stopword_path = doc.value("stopword_path", base.stopword_path);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("config: ") + e.what());
  }
  base.Validate();
  return base;
}

ScoreConfig LoadScoreConfig(const std::string& path, ScoreConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kResourceMissing, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScoreConfig(buf.str(), std::move(base));
}

double CompositeScore(double familiarity, double novelty, PolarityLabel label,
                      bool require_emotive) {
  if (require_emotive && label == PolarityLabel::kNeutral) return 0.0;
  return std::sqrt(familiarity * novelty);
}

StickyScore WordStickiness(std::string_view word, const FrequencyModel& model,
                           const SentimentLexicon& lexicon,
                           const ScoreConfig& config) {
  StickyScore score;
  score.familiarity = Familiarity(word, model.pop);
  score.novelty = Novelty(word, model.context);
  score.polarity = ClassifyPolarity(word, lexicon);
  score.composite = CompositeScore(score.familiarity, score.novelty,
                                   score.polarity.label,
                                   config.require_emotive);
  return score;
}

bool QualifiesAsSticky(const StickyScore& score, const ScoreConfig& config) {
  if (score.familiarity < config.theta_f) return false;
  if (score.novelty < config.theta_n) return false;
  return !config.require_emotive ||
         score.polarity.label != PolarityLabel::kNeutral;
}

TitleAnalysis AnalyzeTitle(const Title& title, const FrequencyModel& model,
                           const SentimentLexicon& lexicon,
                           const WordSet& stopwords,
                           const ScoreConfig& config) {
  TitleAnalysis analysis;
  for (const Token& token : title.tokens) {
    if (!IsContentWord(token, stopwords, config.min_len)) continue;
    WordScore ws{token.position, token.normal,
                 WordStickiness(token.normal, model, lexicon, config)};
    analysis.title_score = std::max(analysis.title_score, ws.score.composite);
    analysis.words.push_back(std::move(ws));
  }
  return analysis;
}

double TitleScore(const Title& title, const FrequencyModel& model,
                  const SentimentLexicon& lexicon, const WordSet& stopwords,
                  const ScoreConfig& config) {
  return AnalyzeTitle(title, model, lexicon, stopwords, config).title_score;
}

}  // namespace sticky
