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

#include "sticky/sentiment_lex.h"

#include <cmath>

#include "sticky/errors.h"

namespace sticky {

std::string_view PolarityLabelName(PolarityLabel label) {
  switch (label) {
    case PolarityLabel::kPositive: return "Positive";
    case PolarityLabel::kNegative: return "Negative";
    case PolarityLabel::kNeutral: return "Neutral";
  }
  return "Neutral";
}

void SentimentLexicon::Set(std::string word, double valence) {
  if (!(valence >= -1.0 && valence <= 1.0)) {
    throw Error(ErrorCode::kMalformedInput,
                "valence for '" + word + "' outside [-1, 1]");
  }
  scores[std::move(word)] = valence;
}

Polarity ClassifyPolarity(std::string_view word,
                          const SentimentLexicon& lexicon) {
  const auto it = lexicon.scores.find(std::string(word));
  if (it == lexicon.scores.end()) return {};
  const double v = it->second;
  if (v > lexicon.neutral_band) return {PolarityLabel::kPositive, v};
  if (v < -lexicon.neutral_band) return {PolarityLabel::kNegative, v};
  return {PolarityLabel::kNeutral, v};
}

}  // namespace sticky
