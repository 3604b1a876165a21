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
#include <string>
#include <string_view>
#include <vector>

#include "sticky/corpus_model.h"
#include "sticky/sentiment_lex.h"
#include "sticky/text_core.h"

namespace sticky {

struct ScoreConfig {
  double theta_f = 0.3;  // familiarity threshold
  double theta_n = 0.3;  // novelty threshold
  bool require_emotive = true;
  double neutral_band = SentimentLexicon::kDefaultNeutralBand;
  std::size_t min_len = 3;
  std::string stopword_path;  // empty: built-in list

  // Throws Error(kMalformedInput) when a threshold leaves [0, 1].
  void Validate() const;
};

// Config file: a JSON object with any subset of theta_f, theta_n,
// require_emotive, neutral_band, min_len, stopword_path. Missing keys keep
// the values already in `base`.
ScoreConfig ParseScoreConfig(std::string_view text, ScoreConfig base = {});
ScoreConfig LoadScoreConfig(const std::string& path, ScoreConfig base = {});

struct StickyScore {
  double familiarity = 0.0;
  double novelty = 0.0;
  Polarity polarity;
  double composite = 0.0;
};

// Geometric mean of familiarity and novelty, gated to 0 for Neutral words
// when require_emotive is set.
double CompositeScore(double familiarity, double novelty,
                      PolarityLabel label, bool require_emotive);

StickyScore WordStickiness(std::string_view word, const FrequencyModel& model,
                           const SentimentLexicon& lexicon,
                           const ScoreConfig& config);

bool QualifiesAsSticky(const StickyScore& score, const ScoreConfig& config);

struct WordScore {
  std::size_t position = 0;
  std::string word;
  StickyScore score;
};

struct TitleAnalysis {
  std::vector<WordScore> words;  // content words only, in title order
  double title_score = 0.0;      // max composite, 0 when no content words
};

TitleAnalysis AnalyzeTitle(const Title& title, const FrequencyModel& model,
                           const SentimentLexicon& lexicon,
                           const WordSet& stopwords, const ScoreConfig& config);

double TitleScore(const Title& title, const FrequencyModel& model,
                  const SentimentLexicon& lexicon, const WordSet& stopwords,
                  const ScoreConfig& config);

}  // namespace sticky
